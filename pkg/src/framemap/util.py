"""Small shared helpers."""

import hashlib


def stable_seed(*parts) -> int:
    """Derive a 64-bit seed from arbitrary parts, stably across runs and platforms.

    Python's builtin ``hash`` is salted per process, so seeds routed through it
    would break the reproducibility contract; sha256 does not.
    """
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
