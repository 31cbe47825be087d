"""
Contagious k-sets from the minimum degree alone
===============================================
"""

from contagious import construct_dense_seed, dense_degree_bound, gen_random_min_degree, percolation_time

# Any k neighbours of one vertex spread at threshold k once the minimum
# degree reaches ceil((k-1)/k * n).
for k in (2, 3, 4, 5):
    times = []
    for n in range(10, 61, 10):
        g = gen_random_min_degree(n, k, rng_seed=n)
        recipe = construct_dense_seed(g, k)
        times.append(percolation_time(g, recipe.seed, k))
    print(f"k={k}: bound at n=60 is {dense_degree_bound(60, k)}, rounds {times}")

# DC_n is the exception at k = 2: neighbours of one vertex may sit in the
# same clique, so the recipe switches to a cross pair.
from contagious import gen_dc

print(construct_dense_seed(gen_dc(12), 2))
