from fastapi import FastAPI

from coclust_api.service.views import sketch_router


def initialize_routers(server: FastAPI) -> None:
    server.include_router(sketch_router, prefix="/sketch", tags=["Sketch"])
