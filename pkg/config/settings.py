from pydantic_settings import BaseSettings
from pathlib import Path

class Settings(BaseSettings):
    # Project Paths
    BASE_DIR: Path = Path(__file__).resolve().parent.parent
    PUBLISHED_TABLES_PATH: Path = BASE_DIR / "data" / "published_tables.yaml"
    OUTPUT_DIR: Path = BASE_DIR / "data" / "graphs"

    # Numerical tolerances
    VERIFY_TOL: float = 1e-8
    BOUND_SLACK: float = 1e-6
    ZERO_EIGENVALUE_CUTOFF: float = 1e-9
    FLOOR_SNAP: float = 1e-9

    # Table reproduction tolerances (decimal published entries)
    DECIMAL_REL_TOL: float = 0.001
    DECIMAL_ABS_TOL: float = 0.02

    # Output
    DEFAULT_FORMAT: str = "tsv"
    VERBOSE: bool = False

    # Enumeration / random corpus
    RANDOM_SEED: int = 20240611
    BRUTE_FORCE_PARTITIONS: int = 1

    class Config:
        env_file = ".env"
        env_prefix = "KIRCHHOFF_"
        case_sensitive = False

settings = Settings()
