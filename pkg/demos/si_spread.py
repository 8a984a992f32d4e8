"""Closed-form SI curve next to a seeded simulation on the eigenvector fixture graph."""
from simplexnet import epidemic as epi
from simplexnet import fixtures as fx
from simplexnet.complex import Graph

g = Graph.from_edges(fx.EIGEN_EDGES)
params = epi.params_from_graph(g, g0=1, P=0.6)
print(f"N={params.N} lam={params.lam:.3f} r={epi.infection_rate(params):.4f}")
for state in epi.run(g, params, steps=5, rng_seed=2024):
    rec = state.to_record(params)
    print(f"t={rec['t']} g(t)={rec['g_expected']:.3f} infectious={rec['infectious_ids']} shortfall={rec['shortfall']}")

congress = epi.SIParams(N=20, g0=4, P=0.2, lam=5.3)
print("congress constants: r =", epi.infection_rate(congress), " g(1) =", epi.expected_infected(congress, 1))
