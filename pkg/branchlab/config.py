"""
Configuration management for branchlab
"""
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    # Environment
    environment: str = "development"
    log_level: str = "INFO"
    log_file: str = "logs/branchlab.log"

    # Catalog: extra catalog files, separated by os.pathsep
    branchlab_catalog: str = ""

    # Branching cutoffs (degree in the h0-grading)
    default_cutoff: int = 4
    quick_cutoff: int = 2

    # Analytic verification
    kernel_truncation: int = 30
    kernel_samples: int = 20
    kernel_seed: int = 20240611
    kernel_tolerance: float = 1e-8
    sample_radius: float = 0.5

    # Rendering
    float_digits: int = 12


# Global settings instance
settings = Settings()
