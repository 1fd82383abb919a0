from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    APP_NAME: str = "Cocluster Sketch Service"
    LOG_LEVEL: str = "INFO"
    HOST: str = "0.0.0.0"
    PORT: int = 8000

    # Service-side request limits
    MAX_REQUEST_EDGES: int = 200_000
    ORACLE_MAX_NODES: int = 10  # Bell(10) = 115975 partitions

    # Budgets below this share of (n_users + n_items) rows degrade to random-hash quality
    MIN_COMPRESSION_RATIO: float = 0.2


settings = Settings()
