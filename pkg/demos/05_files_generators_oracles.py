"""Instance files, seeded generators, and brute-force cross-checking.

Run with: python3 demos/05_files_generators_oracles.py
"""

import random

from ndsolve import (
    TypeTemplate,
    compute_type_partition,
    generate_from_template,
    oracle_motif,
    oracle_paths,
    oracle_precolor,
    parse_instance,
    random_instance,
    random_template,
    serialize_instance,
    solve_motif,
    solve_paths,
    solve_precolor,
)

# The file format is line oriented: a header, edges, then one family of
# problem annotations (1-based ids on disk).
text = """\
# a precoloring instance
p graph 4
e 1 2
e 2 3
e 3 4
e 4 1
colors 3
precolor 1 1
precolor 3 2
"""
inst = parse_instance(text)
print("parsed:", type(inst).__name__, "with budget", inst.num_colors)
print("round-trip is structural:", parse_instance(serialize_instance(inst)) == inst)

# Templates invert the quotient construction: prescribe class sizes,
# clique flags and class-level edges, then materialize.
template = TypeTemplate(sizes=(3, 4, 2), clique=(True, False, False),
                        edges=((0, 1), (1, 2)))
g = generate_from_template(template, seed=9)
print(
    f"\ntemplate with 3 classes -> n={g.n}, m={g.m}, "
    f"computed nd={compute_type_partition(g).num_types} (never above 3)"
)

# Seeded generators produce valid annotated instances for all three
# problems; identical seeds give identical instances.
t = random_template(3, 10, seed=21)
a = random_instance("paths", t, seed=5, num_pairs=2)
b = random_instance("paths", t, seed=5, num_pairs=2)
print("deterministic generation:", a == b)

# The brute-force deciders know nothing about classes or count variables,
# which makes them honest referees for the structured solvers.
rng = random.Random(0)
solvers = {"motif": solve_motif, "paths": solve_paths, "precolor": solve_precolor}
oracles = {"motif": oracle_motif, "paths": oracle_paths, "precolor": oracle_precolor}
agreements = 0
for trial in range(60):
    problem = ("motif", "paths", "precolor")[trial % 3]
    template = random_template(rng.randint(1, 4), rng.randint(4, 11), rng.getrandbits(32))
    kwargs = {"num_pairs": rng.randint(0, 2)} if problem == "paths" else {}
    instance = random_instance(problem, template, rng.getrandbits(32), **kwargs)
    fast = solvers[problem](instance).answer
    slow = oracles[problem](instance)[0]
    agreements += fast == slow
print(f"solver vs brute force on 60 random instances: {agreements}/60 agree")

# The same workflow is available from the shell:
#   ndsolve gen motif --k 3 --n 12 --seed 7 > inst.nd
#   ndsolve motif --input inst.nd --json --witness --check
#   ndsolve nd --input inst.nd
#   ndsolve bench --problem paths --k 2,4 --n 1000 --seeds 3 --pairs 10
