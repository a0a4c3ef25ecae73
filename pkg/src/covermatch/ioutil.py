"""Small shared I/O helpers: canonical JSON documents and file digests."""

import hashlib
import json


def canonical_json_bytes(obj) -> bytes:
    """Serialize to deterministic UTF-8 JSON (sorted keys, tight separators).

    Floats go through repr, so every finite value round-trips losslessly and
    re-serializing a loaded document reproduces the original bytes.
    """
    return (json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n").encode("utf-8")


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()
