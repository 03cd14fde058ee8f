import os
from typing import Final

from dotenv import load_dotenv

load_dotenv()


def _env_flag(name: str, default: bool) -> bool:
    return os.getenv(name, str(default)).strip().lower() in {"1", "true", "yes", "on"}


LOG_LEVEL: Final[str] = os.getenv("PINCLASS_LOG_LEVEL", "WARNING").upper()
PRUNE_SUBSUMED_FACTORS: Final[bool] = _env_flag("PINCLASS_PRUNE_FACTORS", True)
STRICT_ANTICHAIN: Final[bool] = _env_flag("PINCLASS_STRICT_ANTICHAIN", True)
PARALLEL_DECIDERS: Final[bool] = _env_flag("PINCLASS_PARALLEL", False)
ORACLE_MAX_LENGTH: Final[int] = int(os.getenv("PINCLASS_ORACLE_MAX_LENGTH", 10))
ORACLE_MAX_PIN_SEQUENCE_LENGTH: Final[int] = int(
    os.getenv("PINCLASS_ORACLE_MAX_PIN_SEQUENCE_LENGTH", 9)
)

# Bounds from the structure of simple pin-permutations
MAX_KNIGHT_PAIRS: Final[int] = 48
MAX_PIN_WORDS: Final[int] = 64
MAX_FACTORS_PER_PATTERN: Final[int] = 256
MIN_FACTOR_PATTERN_LENGTH: Final[int] = 4
