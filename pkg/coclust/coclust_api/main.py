import uvicorn

from coclust_api.app import create_app
from coclust_api.config import settings

app = create_app()


if __name__ == "__main__":
    uvicorn.run(app, host=settings.HOST, port=settings.PORT)
