"""On-disk store for universal polynomials.

File layout (``universal.cache`` inside the cache directory)::

    MZETA-CACHE v1
    P 2
    s1^2*t2 + s2*t1^2 - 2*s2*t2

    Pnr 2 2
    s1*s3 - s4

Writes replace the whole file atomically (temp file + rename), so readers
never observe a partial record.  Every record is re-checked for its grading
when loaded.
"""
from __future__ import annotations

import os
import tempfile
import threading
from math import comb
from pathlib import Path

from .algebra import MultiPoly, parse_poly
from .errors import UsageError
from .universal import p_table, pnr_table, universal_P, universal_Pnr

HEADER = "MZETA-CACHE v1"
FILENAME = "universal.cache"
ENV_VAR = "MZETA_CACHE_DIR"
MAX_WEIGHT = 16

Key = tuple  # ("P", n) or ("Pnr", n, r)


def default_cache_dir() -> Path | None:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _weight(vt, e) -> tuple[int, int]:
    # weight of s-generators and of t-generators (grading deg s_i = deg t_i = i)
    ws = wt = 0
    for name, k in zip(vt.names, e):
        if not k:
            continue
        idx = int(name[1:])
        if name[0] == "s":
            ws += idx * k
        else:
            wt += idx * k
    return ws, wt


def check_grading(key: Key, poly: MultiPoly) -> bool:
    if key[0] == "P":
        n = key[1]
        return all(_weight(poly.vars, e) == (n, n) for e in poly.terms) if n else poly == 1
    n, r = key[1], key[2]
    return all(_weight(poly.vars, e) == (n * r, 0) for e in poly.terms) if n and r else True


def _table(key: Key):
    return p_table(key[1]) if key[0] == "P" else pnr_table(key[1] * key[2])


def _key_text(key: Key) -> str:
    return " ".join(str(k) for k in key)


class CorruptCache(UsageError):
    pass


class UniversalCache:
    """Memory-backed view of a cache file; ``None`` directory means memory only."""

    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory is not None else None
        self._lock = threading.Lock()
        self._entries: dict[Key, MultiPoly] = {}
        self.hits = 0
        self.misses = 0
        if self.directory is not None:
            self._load()

    @property
    def path(self) -> Path | None:
        return self.directory / FILENAME if self.directory is not None else None

    # -- persistence ----------------------------------------------------------
    def _load(self) -> None:
        path = self.path
        if path is None or not path.exists():
            return
        lines = path.read_text(encoding="ascii").split("\n")
        if not lines or lines[0] != HEADER:
            raise CorruptCache(f"{path}: missing header {HEADER!r}")
        i = 1
        while i < len(lines):
            if not lines[i].strip():
                i += 1
                continue
            head = lines[i].split()
            if i + 1 >= len(lines):
                raise CorruptCache(f"{path}: record {lines[i]!r} has no body")
            body = lines[i + 1]
            try:
                if head[0] == "P" and len(head) == 2:
                    key: Key = ("P", int(head[1]))
                elif head[0] == "Pnr" and len(head) == 3:
                    key = ("Pnr", int(head[1]), int(head[2]))
                else:
                    raise ValueError
            except ValueError:
                raise CorruptCache(f"{path}: bad record header {lines[i]!r}") from None
            poly = parse_poly(body, _table(key))
            if not check_grading(key, poly):
                raise CorruptCache(f"{path}: record {_key_text(key)} fails the grading check")
            self._entries[key] = poly
            i += 2

    def dump_text(self) -> str:
        parts = [HEADER]
        for key in sorted(self._entries, key=lambda k: (k[0], k[1:])):
            parts.append(_key_text(key))
            parts.append(self._entries[key].render())
            parts.append("")
        return "\n".join(parts) + "\n"

    def save(self) -> None:
        if self.directory is None:
            return
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(prefix=".universal-", dir=self.directory)
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                fh.write(self.dump_text())
            os.replace(tmp, self.path)
        except OSError as exc:
            raise UsageError(f"cache directory {self.directory} is not writable: {exc}") from exc

    def clear(self) -> int:
        n = len(self._entries)
        self._entries.clear()
        if self.path is not None and self.path.exists():
            try:
                self.path.unlink()
            except OSError as exc:
                raise UsageError(f"cannot clear cache: {exc}") from exc
        return n

    # -- access ---------------------------------------------------------------
    def keys(self) -> list[Key]:
        return sorted(self._entries, key=lambda k: (k[0], k[1:]))

    def __len__(self) -> int:
        return len(self._entries)

    def _get(self, key: Key, compute) -> MultiPoly:
        with self._lock:
            got = self._entries.get(key)
        if got is not None:
            self.hits += 1
            return got
        self.misses += 1
        poly = compute()
        with self._lock:
            self._entries.setdefault(key, poly)
        return poly

    def P(self, n: int) -> MultiPoly:
        return self._get(("P", n), lambda: universal_P(n))

    def Pnr(self, n: int, r: int) -> MultiPoly:
        if n * r > MAX_WEIGHT:
            raise UsageError(f"P_{{{n},{r}}} has weight {n * r} > {MAX_WEIGHT}; not supported")
        if n * r == 0:
            return universal_Pnr(n, r)  # constant, not worth a record
        return self._get(("Pnr", n, r), lambda: universal_Pnr(n, r))

    def warm(self, g: int) -> list[Key]:
        """Compute every P_{m,n} the universal q-route needs for this g."""
        if g < 1:
            raise UsageError("cache warm needs g >= 1")
        added = []
        for n in range(1, 2 * g + 1):
            for m in range(1, comb(2 * g, n) + 1):
                if m * n > MAX_WEIGHT:
                    continue
                key = ("Pnr", m, n)
                if key not in self._entries:
                    self.Pnr(m, n)
                    added.append(key)
        self.save()
        return added

    def stats(self) -> dict:
        return {
            "directory": str(self.directory) if self.directory else None,
            "entries": len(self._entries),
            "hits": self.hits,
            "misses": self.misses,
        }
