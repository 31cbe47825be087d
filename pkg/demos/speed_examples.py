"""
How many rounds does percolation take in a dense graph?
=======================================================

Three small graphs where a well-chosen seed needs the maximum number of
rounds allowed at its threshold.
"""

from contagious import gen_circulant, gen_circulant_seed, gen_speed8, percolate, scan_seeds

# The 8-vertex graph: minimum degree 4 = n/2, threshold 2.
g = gen_speed8()
trace = percolate(g, {0, 1}, 2)
for i, wave in enumerate(trace.waves, start=1):
    print(f"round {i}: {list(wave)}")

# Every pair and every triple, with their worst case.
for size in (2, 3):
    stats = scan_seeds(g, 2, size)
    print(size, stats.contagious_count, "of", stats.total, "contagious, max rounds", stats.max_rounds, stats.argmax_seed)

# Circulants: vertices adjacent unless their circular distance is small.
for k in (3, 4, 5, 6):
    c = gen_circulant(k)
    t = percolate(c, gen_circulant_seed(k), k)
    print(f"k={k}: n={c.n}, first wave {list(t.waves[0])}, {t.rounds} rounds")
