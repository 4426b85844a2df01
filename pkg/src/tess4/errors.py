"""Exception taxonomy shared by the library and the CLI.

Each class maps to a fixed CLI exit code (see `tess4.cli`):

* DomainError (2): the input violates a documented precondition.
* NotFoundError (3): a bounded exact search was exhausted without a hit.
* InternalConsistencyError (4): an identity that must hold for correct
  inputs failed; this always signals a bug, never bad user data.
* MemoryCapExceeded (5): the TESS4_MAX_MEM_MB soft cap was exceeded.
"""

from __future__ import annotations

import os
import resource


class DomainError(ValueError):
    """Input outside an operation's documented domain."""


class NotFoundError(RuntimeError):
    """A bounded exhaustive search terminated without finding a witness."""


class InternalConsistencyError(RuntimeError):
    """An exact internal identity failed; indicates an implementation bug."""


class MemoryCapExceeded(RuntimeError):
    """Peak RSS exceeded the soft cap from TESS4_MAX_MEM_MB."""


def check_memory_cap() -> None:
    """Raise MemoryCapExceeded if peak RSS is above TESS4_MAX_MEM_MB.

    The cap is a soft limit: it is polled at coarse checkpoints inside
    long-running enumerations, not enforced by the kernel.
    """
    cap = os.environ.get("TESS4_MAX_MEM_MB")
    if not cap:
        return
    try:
        cap_mb = int(cap)
    except ValueError:
        return
    if cap_mb <= 0:
        return
    used_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    if used_kb > cap_mb * 1024:
        raise MemoryCapExceeded(
            f"peak RSS {used_kb // 1024} MB exceeds TESS4_MAX_MEM_MB={cap_mb}"
        )
