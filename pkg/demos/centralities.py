"""Degree, closeness and eigenvector centralities on the small fixtures."""
from simplexnet import centrality as cen
from simplexnet import fixtures as fx

right = fx.right_complex()
s2 = fx.SIGMA2
print("strict (2,2)-degree of sigma2:", cen.degree_centrality_pp(right, s2, 2, strict=True))
# the bound is 16 here, not 12
print("max degree", cen.max_simplicial_degree_centrality(right, s2), "bound", cen.max_degree_bound(right, s2))
for p in (1, 2):
    h = cen.closeness_centrality_p(right, fx.SIGMA3, p, cen.ClosenessVariant.HARMONIC)
    print(f"harmonic {p}-closeness of sigma3: {h}")

c = fx.eigen_complex()
for p in (1, 2):
    rep = cen.eigenvector_centrality_p(c, p)
    vals = ", ".join(f"{v}:{x:.3f}" for v, x in sorted(rep.values.items()))
    print(f"E{p} ({rep.meta['eigenvalues'][0]:.4f}): {vals}")
print(cen.centrality_report(c, "eigenvector-max").to_csv(decimals=3))
