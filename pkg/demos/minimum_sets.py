"""
Exact minimum contagious sets
=============================

Brute force over seed sets in lexicographic order. Vertices of degree below
the threshold must be seeds, so they are fixed up front.
"""

from contagious import gen_clique_minus_matching, gen_dc, gen_extremal_mk2, gen_star_counterexample, min_contagious

res = min_contagious(gen_dc(8), 2)
print("DC_8:", res.m, res.witness, res.seeds_examined, "seed sets examined")

# K_n minus a perfect matching: every vertex has degree n-2, so at threshold
# n-1 nothing ever activates and every vertex must be seeded.
for n in (6, 8, 10):
    print(n, min_contagious(gen_clique_minus_matching(n), n - 1).m)

# The threshold-2 extremal graph has no contagious k-set...
g = gen_extremal_mk2(30, 3)
print("edges", g.m, "m =", min_contagious(g, 2, upper_bound=5).m)

# ...and a search capped at k says so without enumerating further.
print(min_contagious(g, 2, upper_bound=3).to_dict()["status"])

print("star:", min_contagious(gen_star_counterexample(10, 8), 2).m)
