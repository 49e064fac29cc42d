"""Dinic max-flow on integer capacities.

Capacities are Python ints (arbitrary precision), so min cuts computed here
are exact — the densest-subgraph binary search relies on that.
"""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]  # node -> arc ids
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        if cap < 0 or rcap < 0:
            raise ValueError("negative capacity")
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    q.append(v)
        return self.level[t] >= 0

    def _dfs(self, u: int, t: int, f: int) -> int:
        if u == t:
            return f
        while self.it[u] < len(self.head[u]):
            a = self.head[u][self.it[u]]
            v = self.to[a]
            if self.cap[a] > 0 and self.level[v] == self.level[u] + 1:
                d = self._dfs(v, t, min(f, self.cap[a]))
                if d > 0:
                    self.cap[a] -= d
                    self.cap[a ^ 1] += d
                    return d
            self.it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        inf = 1 + sum(self.cap[a] for a in self.head[s] if a % 2 == 0)
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                f = self._dfs(s, t, inf)
                if f == 0:
                    break
                flow += f
        return flow

    def min_cut_source_side(self, s: int) -> set[int]:
        """After max_flow: nodes reachable from s in the residual network."""
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen
