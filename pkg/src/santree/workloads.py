"""Request-sequence generators and trace-file ingestion."""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field

MAX_TRACE_LEN = 10**6


class WorkloadError(Exception):
    pass


@dataclass
class TemporalConfig:
    theta: float  # probability of a fresh pair; 1.0 = fully random
    window: int  # history length the repeat branch draws from
    seed: int = 0

    def check(self):
        if not (0 < self.theta <= 1):
            raise WorkloadError("theta must be in (0, 1]")
        if self.window < 1:
            raise WorkloadError("window must be >= 1")


@dataclass
class Trace:
    n: int
    requests: list
    provenance: str
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.requests)

    def dumps(self):
        lines = ["%d %d" % (self.n, len(self.requests))]
        lines.extend("%d %d" % (u, v) for u, v in self.requests)
        return "\n".join(lines) + "\n"

    def dump(self, path):
        with open(path, "w") as f:
            f.write(self.dumps())

    @classmethod
    def load_cached(cls, path):
        with open(path) as f:
            lines = f.read().strip().splitlines()
        n, m = (int(x) for x in lines[0].split())
        requests = []
        for ln in lines[1 : m + 1]:
            u, v = (int(x) for x in ln.split())
            requests.append((u, v))
        return cls(n, requests, "file:%s" % path)


def _fresh_pair(rng, n):
    u = rng.randrange(1, n + 1)
    v = 1 + (u - 1 + 1 + rng.randrange(n - 1)) % n
    return (u, v)


def gen_uniform(n, m, seed):
    """m i.i.d. requests uniform over ordered pairs with distinct endpoints."""
    if n < 2:
        raise WorkloadError("need n >= 2")
    rng = random.Random(seed)
    requests = [_fresh_pair(rng, n) for _ in range(m)]
    return Trace(n, requests, "uniform(n=%d,m=%d,seed=%d,rng=mt19937)" % (n, m, seed))


def gen_finite_uniform(n):
    """Each unordered pair exactly once, shuffled with seed 0."""
    if n < 2:
        raise WorkloadError("need n >= 2")
    requests = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    random.Random(0).shuffle(requests)
    return Trace(n, requests, "finite-uniform(n=%d,rng=mt19937,seed=0)" % n)


def gen_temporal(n, m, cfg):
    """Window-repeat locality model: fresh pair with probability theta,
    otherwise a uniform redraw from the last `window` requests."""
    if n < 2:
        raise WorkloadError("need n >= 2")
    if m < 1:
        raise WorkloadError("need m >= 1")
    cfg.check()
    rng = random.Random(cfg.seed)
    history = deque(maxlen=cfg.window)
    requests = []
    repeats = 0
    for _ in range(m):
        if history and rng.random() >= cfg.theta:
            pair = history[rng.randrange(len(history))]
            repeats += 1
        else:
            pair = _fresh_pair(rng, n)
        requests.append(pair)
        history.append(pair)
    tag = "temporal(n=%d,m=%d,theta=%g,window=%d,seed=%d,rng=mt19937)" % (
        n,
        m,
        cfg.theta,
        cfg.window,
        cfg.seed,
    )
    return Trace(n, requests, tag, meta={"repeat_fraction": repeats / m})


def load_trace(path, n_target, src_col=0, dst_col=1, delimiter=None):
    """Ingest a delimiter-separated trace and remap ids to 1..n_target.

    Keeps the n_target most frequent raw ids (ties by raw id), drops
    requests touching any other id, remaps the survivors by ascending
    frequency rank, and truncates to 10^6 requests.
    """
    try:
        with open(path) as f:
            lines = f.read().splitlines()
    except OSError as exc:
        raise WorkloadError("cannot read trace %s: %s" % (path, exc))
    raw = []
    need = max(src_col, dst_col) + 1
    for lineno, ln in enumerate(lines, start=1):
        if not ln.strip():
            continue
        fields = ln.split(delimiter)
        if len(fields) < need:
            raise WorkloadError("malformed line %d in %s: %r" % (lineno, path, ln))
        raw.append((fields[src_col], fields[dst_col]))
    freq = Counter()
    for u, v in raw:
        freq[u] += 1
        freq[v] += 1
    if len(freq) < 2:
        raise WorkloadError("fewer than 2 distinct ids in %s" % path)
    keep = sorted(freq, key=lambda x: (-freq[x], x))[:n_target]
    # Rank kept ids by ascending frequency, ties by raw id.
    order = sorted(keep, key=lambda x: (freq[x], x))
    mapping = {raw_id: rank + 1 for rank, raw_id in enumerate(order)}
    requests = []
    for u, v in raw:
        if u in mapping and v in mapping:
            requests.append((mapping[u], mapping[v]))
            if len(requests) >= MAX_TRACE_LEN:
                break
    return Trace(
        len(mapping),
        requests,
        "trace(%s,n=%d,src=%d,dst=%d)" % (path, len(mapping), src_col, dst_col),
    )
