"""Build the five-vertex example as a clique complex and as a Rips complex, then grow the radius."""
from simplexnet import fixtures as fx
from simplexnet.complex import Graph, Metric, build_clique_complex, build_vietoris_rips, distance

g = Graph.from_edges(fx.EXAMPLE_EDGES)
c = build_clique_complex(g)
print("clique complex:", c.f_vector(), sorted(c.facets))

pc = fx.example_point_cloud()
for r in (1.0, 2.0, fx.EXAMPLE_RIPS_RADIUS, 5.0):
    rips = build_vietoris_rips(pc, Metric.EUCLIDEAN, r)
    print(f"rips r={r}: f-vector {rips.f_vector()}  same as clique complex: {rips == c}")

drawn = fx.example_point_cloud(figure=True)
for m in (Metric.EUCLIDEAN, Metric.CHEBYSHEV, Metric.MANHATTAN):
    print(f"{m.value}(x1, x2) on the drawn coordinates = {distance(drawn, 1, 2, m):.6f}")
