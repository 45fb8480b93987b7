"""Independent oracle for the LA2 witness-radius table of the Z coloring.

f(n) = parity of the binary digit sum of |n|. For each g with 1 <= |g| <= 20,
r(g) = max over h in [-2000, 2000] of the least |c| <= 64 with
f(h + c) != f(h + g + c). Rows follow ball order: -1, 1, -2, 2, ...
"""


def f(n):
    return bin(abs(n)).count("1") & 1


def witness_radius(g, h, cap):
    for r in range(cap + 1):
        for c in ((0,) if r == 0 else (-r, r)):
            if f(h + c) != f(h + g + c):
                return r
    return None


def main():
    lines = ["# la2 witness radii for compile(Z): h in [-2000,2000], cap 64"]
    for m in range(1, 21):
        for g in (-m, m):
            radii = [witness_radius(g, h, 64) for h in range(-2000, 2001)]
            assert all(r is not None for r in radii)
            lines.append(f"g={g} r={max(radii)}")
    with open("la2_baseline_z.txt", "w") as out:
        out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
