"""Enumeration caps.

The board-vertex cap defaults to 24 and may be overridden per call or through
the ``PLACEMENT_COMPLEX_CAP`` environment variable.  Variable universes are
bitmask-backed and never exceed 64 variables.
"""

from __future__ import annotations

import os

from .errors import SizeLimitError

DEFAULT_VERTEX_CAP = 24
MAX_VARIABLES = 64
# exhaustive 2^n scans (strong-placement check) are bounded separately
EXHAUSTIVE_VARIABLE_CAP = 20
CAP_ENV_VAR = "PLACEMENT_COMPLEX_CAP"


def vertex_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise SizeLimitError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_VERTEX_CAP


def check_vertices(n: int, cap: int | None = None) -> None:
    limit = vertex_cap(cap)
    if n > limit:
        raise SizeLimitError(f"board has {n} vertices, enumeration cap is {limit}")


def check_variables(n: int, limit: int = MAX_VARIABLES) -> None:
    if n > limit:
        raise SizeLimitError(f"{n} variables exceed the cap of {limit}")
