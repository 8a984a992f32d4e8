"""Score the fixed threshold patterns and search the best thresholds on the congress feature tables."""
from simplexnet import fixtures as fx
from simplexnet.mining import evaluate_pattern_set, scan_thresholds

tbl = fx.congress_features()
non_attacker, attacker = fx.congress_targets()
targets = {t.name: t for t in (non_attacker, attacker)}

for pattern, tname, printed in fx.QUALITY_CHECKS:
    (ev,) = evaluate_pattern_set(tbl, [pattern], [targets[tname]])
    print(f"{str(pattern):<22} {tname:<13} support {ev.support:>2}  q = {ev.quality}  (printed {printed})")

for feature in ("deg11", "eig1", "close1"):
    for op, t in (("<", non_attacker), (">", attacker)):
        res = scan_thresholds(tbl, feature, op, t)
        print(f"best {feature} {op} for {t.name}: {res.pattern}  q = {res.quality}")
