import sys
from orchestrator.pipeline import run_minimum

def main(max_n: int, workers: int):
    """
    Confirms that K_n is the unique minimizer of R+ for n = 2..max_n.
    """
    ok = True
    for n in range(2, max_n + 1):
        result = run_minimum(n, partitions=max(1, workers), workers=workers)
        expected = 2 * (n - 1) ** 2
        unique_complete = len(result.minimizers) == 1 and len(result.argmin) == n * (n - 1) // 2
        status = "✅" if unique_complete and abs(result.min_r_plus - expected) < 1e-9 else "❌"
        ok = ok and status == "✅"
        print(f"{status} n={n}: {result.graphs_checked} connected graphs, min R+ = {result.min_r_plus:.6f} (2(n-1)^2 = {expected})")
    return 0 if ok else 1

if __name__ == "__main__":
    if len(sys.argv) > 1:
        workers = int(sys.argv[2]) if len(sys.argv) > 2 else 1
        sys.exit(main(int(sys.argv[1]), workers))
    else:
        print("Usage: python scripts/brute_force_minimum.py MAX_N [WORKERS]")
