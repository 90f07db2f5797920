"""
Application Configuration
"""
import os
from dotenv import find_dotenv, load_dotenv

# Load environment variables
ENV_FILE = find_dotenv(usecwd=True)
if ENV_FILE:
    load_dotenv(ENV_FILE)


def _int_env(name: str, default: int) -> int:
    return int(os.getenv(name, default))


class Config:
    """Base configuration class"""

    # Logging Configuration
    LOG_LEVEL = os.getenv("IMMGEO_LOG_LEVEL", "INFO")
    LOG_FILE = os.getenv("IMMGEO_LOG_FILE")

    # Randomized verification
    DEFAULT_SEED = _int_env("IMMGEO_SEED", 1)
    DEFAULT_TRIALS = _int_env("IMMGEO_TRIALS", 20)
    DEFAULT_WORDS = _int_env("IMMGEO_WORDS", 100)
    MAX_WORD_LENGTH = 5
    SAMPLE_NUMERATOR_BOUND = _int_env("IMMGEO_SAMPLE_NUMERATOR_BOUND", 30)
    SAMPLE_DENOMINATOR_BOUND = _int_env("IMMGEO_SAMPLE_DENOMINATOR_BOUND", 6)
    SAMPLE_RETRIES = _int_env("IMMGEO_SAMPLE_RETRIES", 50)

    # Desk-scale guards
    MONOMIAL_GUARD = _int_env("IMMGEO_MONOMIAL_GUARD", 10**6)
    MULTIDEGREE_GUARD = _int_env("IMMGEO_MULTIDEGREE_GUARD", 10**4)
    WREATH_GUARD = _int_env("IMMGEO_WREATH_GUARD", 10**7)
    DECOMPOSITION_GUARD = _int_env("IMMGEO_DECOMPOSITION_GUARD", 10**6)
    HESSIAN_GUARD = _int_env("IMMGEO_HESSIAN_GUARD", 200)
    ORBIT_GUARD = _int_env("IMMGEO_ORBIT_GUARD", 400)


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.getenv("IMMGEO_LOG_LEVEL", "DEBUG")


class TestingConfig(Config):
    """Testing configuration"""
    LOG_LEVEL = "WARNING"
    DEFAULT_SEED = 1


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'default': Config
}


def get_config(name: str = None) -> type:
    """
    Resolve the active configuration class

    Args:
        name: Configuration name; falls back to IMMGEO_ENV, then 'default'

    Returns:
        Configuration class
    """
    name = name or os.getenv("IMMGEO_ENV", "default")
    return config.get(name, Config)
