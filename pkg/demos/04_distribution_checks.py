"""Statistical self-validation of the sampling distributions.

Runs the Monte-Carlo checks (equipartition, coefficient variance laws, exact
borders and endpoints, Dirichlet moments, uniform choice) and then shows the
fault-injection hook catching a deliberately mis-scaled coefficient law.
"""

from primeaug import cifar_preset, validate_statistics

report = validate_statistics(cifar_preset(), trials=10_000, master_seed=0)
print(report.format())

print()
print("fault injection: spatial coefficients scaled x2 must fail the law")
broken = validate_statistics(
    cifar_preset(), trials=5_000, master_seed=0, _spatial_beta_scale=2.0
)
for check in broken.checks:
    if check.name == "spatial_coefficient_law":
        state = "pass" if check.passed else "FAIL (as intended)"
        print(f"spatial_coefficient_law: stat={check.statistic:.3f} -> {state}")
