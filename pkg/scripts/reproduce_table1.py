"""Print the first six triangular numbers that are also centered triangular."""

from kgonal.intersect import stream

EXPECTED = [(1, 1, 1), (4, 3, 10), (16, 10, 136), (61, 36, 1891), (229, 133, 26335), (856, 495, 366796)]


def main():
    rows = stream(3, 0, 6)
    for r in rows:
        print(f"t_{r.n} = {r.value:<8} T_{r.m} = {r.value}")
    got = [(r.n, r.m, r.value) for r in rows]
    print("match" if got == EXPECTED else "MISMATCH")


if __name__ == "__main__":
    main()
