"""Deterministic seed derivation for parallel Monte-Carlo runs.

Child streams are derived by hashing (master seed, labels...) so that results
do not depend on execution order or worker count, and so that the same trial
index yields the same draws regardless of which sweep row it belongs to.
"""

import hashlib


def derive_seed(master: int, *parts) -> int:
    """Derive a 64-bit child seed from a master seed and a label tuple.

    Stable across processes and platforms (unlike hash()).
    """
    text = repr((int(master),) + tuple(parts))
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
