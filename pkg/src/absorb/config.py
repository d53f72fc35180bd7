"""Process-wide limits and scan options.

The CLI mutates :data:`settings` once at startup; library callers can use
:func:`configured` to override values temporarily.
"""

import contextlib
import dataclasses
import os

DEFAULT_SIZE_CAP = 4096
DEFAULT_COST_CAP = 10**8


def _env_size_cap():
    raw = os.environ.get("ABSORB_SIZE_CAP")
    if not raw:
        return DEFAULT_SIZE_CAP
    return int(raw)


@dataclasses.dataclass
class Settings:
    size_cap: int = dataclasses.field(default_factory=_env_size_cap)
    cost_cap: int = DEFAULT_COST_CAP
    # rings at or below this size get full add/mul tables
    table_cap: int = 1024
    force: bool = False
    fast: bool = False
    jobs: int = 1


settings = Settings()


@contextlib.contextmanager
def configured(**overrides):
    old = {k: getattr(settings, k) for k in overrides}
    for k, v in overrides.items():
        if not hasattr(settings, k):
            raise AttributeError(k)
        setattr(settings, k, v)
    try:
        yield settings
    finally:
        for k, v in old.items():
            setattr(settings, k, v)
