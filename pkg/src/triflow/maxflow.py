"""Small integer max-flow (Dinic) used by the orientation and cut routines."""

from __future__ import annotations

from collections import deque


class Dinic:
    """Max-flow on a directed network with integer capacities.

    Nodes are integers ``0..n-1``.  ``add_edge`` returns the index of the
    forward arc so callers can read back its flow after ``max_flow``.
    """

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def flow_on(self, idx: int) -> int:
        """Flow pushed through the forward arc ``idx`` (its reverse residual)."""
        return self.cap[idx ^ 1]

    def _bfs(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for idx in self.head[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def _dfs(self, u: int, t: int, pushed: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return pushed
        while it[u] < len(self.head[u]):
            idx = self.head[u][it[u]]
            v = self.to[idx]
            if self.cap[idx] > 0 and level[v] == level[u] + 1:
                got = self._dfs(v, t, min(pushed, self.cap[idx]), level, it)
                if got:
                    self.cap[idx] -= got
                    self.cap[idx ^ 1] += got
                    return got
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        total = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                got = self._dfs(s, t, 1 << 60, level, it)
                if not got:
                    break
                total += got
                if limit is not None and total >= limit:
                    return total

    def reachable_from(self, s: int) -> set[int]:
        """Nodes reachable through positive residual capacity (min-cut side)."""
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for idx in self.head[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen
