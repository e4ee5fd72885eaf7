"""Throughput comparison: compiled stemmer extension vs pure-Python fallback.

Stems the bundled reference vocabulary (~24k words) repeatedly with both
implementations and reports words/second and the speedup factor. Also
cross-checks that the two produce identical output on the run.

Run from the repository root:  python benchmarks/bench_stemmer.py [repeats]
"""

import sys
import time
from pathlib import Path

from termsift import porter as porter_py

VOC = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "porter" / "voc.txt"


def bench(name, stem, words, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        start = time.perf_counter()
        out = [stem(w) for w in words]
        best = min(best, time.perf_counter() - start)
    rate = len(words) / best
    print(f"{name:>10}: {best * 1000:8.1f} ms/pass  {rate / 1000:8.0f} kwords/s")
    return out, rate


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    words = VOC.read_text().split()
    print(f"{len(words)} words, best of {repeats} passes\n")

    out_pure, rate_pure = bench("pure", porter_py.stem, words, repeats)
    try:
        from termsift import _porter
    except ImportError:
        print("\ncompiled extension not built; only the pure implementation was timed")
        return
    out_ext, rate_ext = bench("compiled", _porter.stem, words, repeats)

    if out_pure != out_ext:
        diff = sum(a != b for a, b in zip(out_pure, out_ext))
        raise SystemExit(f"implementations disagree on {diff} words")
    print(f"\noutputs identical; compiled is {rate_ext / rate_pure:.1f}x faster")


if __name__ == "__main__":
    main()
