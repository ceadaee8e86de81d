"""Shared graph fixtures."""

from domlab.graph import build_graph

# K_4 blocks on {1,2,3,4} and {5,6,7,8} joined by the bridge 1-5, with
# pendant vertices 0 (on 1) and 9 (on 5). Certified by exact solve: gamma_t = 2, gamma_t(L) = 4,
# gamma_tm = 6, so the upper sandwich bound is attained.
UPPER_TIGHT = build_graph(10, [
    (0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    (1, 5), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (5, 9),
])
UPPER_TIGHT_TMDS = (1, 2, 3, 5, 6, 7)
