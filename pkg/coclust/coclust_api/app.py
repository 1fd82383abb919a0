import logging
import time
from contextlib import asynccontextmanager
from typing import AsyncIterator, Awaitable, Callable, Dict

from fastapi import FastAPI, Request, Response

from coclust_api import __version__
from coclust_api.config import settings
from coclust_api.init import initialize_routers

# Configure logging
logging.basicConfig(level=settings.LOG_LEVEL)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncIterator[None]:
    logger.info(f"🚀 Starting {settings.APP_NAME}...")
    yield
    logger.info(f"🛑 Shutting down {settings.APP_NAME}...")


def create_app() -> FastAPI:
    logger.info("🔧 Creating sketch service FastAPI application...")
    server = FastAPI(
        docs_url="/",
        title=settings.APP_NAME,
        version=__version__,
        lifespan=lifespan,
    )

    @server.middleware("http")
    async def add_process_time(request: Request, call_next: Callable[[Request], Awaitable[Response]]) -> Response:
        start = time.perf_counter()
        response = await call_next(request)
        elapsed = time.perf_counter() - start
        response.headers["X-Process-Time"] = f"{elapsed:.4f}"
        logger.info(f"⏱️ {request.method} {request.url.path} took {elapsed:.3f}s")
        return response

    @server.get("/health")
    async def health() -> Dict[str, str]:
        return {"status": "ok", "service": settings.APP_NAME, "version": __version__}

    logger.info("📋 Initializing routers...")
    initialize_routers(server=server)
    logger.info("✅ Sketch service application created successfully")

    return server
