"""Throughput of full augmentation draws at both preset operating points."""

from primeaug import bench_throughput, cifar_preset, imagenet_preset

for name, cfg, size, count in [
    ("cifar preset @ 32x32", cifar_preset(), 32, 128),
    ("imagenet preset @ 224x224", imagenet_preset(), 224, 12),
]:
    report = bench_throughput(cfg, size, size, count=count, threads=1)
    print(name)
    print(report.format())
    print()
