"""Independent elimination oracle for 2x2 K-matrices of the sl2 R-matrix.

Solves the entrywise polynomial system of the untwisted reflection equation
    K1 R21 K2 R12 = R21 K2 R12 K1        (m = 1, d = 2)
for the four unknown entries of K and prints the invertible solution
families. Also re-checks the Yang-Baxter equation by direct 8x8
multiplication. Run:  python3 tests/oracles/solve_k.py
"""
import sympy as sp

q = sp.symbols("q", nonzero=True)
a, b, c, d = sp.symbols("a b c d")

R = sp.Matrix([[q, 0, 0, 0],
               [0, 1, q - 1 / q, 0],
               [0, 0, 1, 0],
               [0, 0, 0, q]])
P = sp.Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
I2 = sp.eye(2)


def kron(A, B):
    return sp.kronecker_product(A, B)


def ybe_check():
    # R12, R23 directly; R13 = P23 R12 P23
    P23 = kron(I2, P)
    R12 = kron(R, I2)
    R23 = kron(I2, R)
    R13 = P23 * R12 * P23
    lhs = R12 * R13 * R23
    rhs = R23 * R13 * R12
    return sp.simplify(lhs - rhs) == sp.zeros(8, 8)


def solve():
    K = sp.Matrix([[a, b], [c, d]])
    K1 = kron(K, I2)
    K2 = kron(I2, K)
    R12 = R
    R21 = P * R * P
    eqs = K1 * R21 * K2 * R12 - R21 * K2 * R12 * K1
    eqs = [sp.factor(sp.together(e)) for e in eqs if sp.simplify(e) != 0]
    nums = list({sp.numer(e) for e in eqs})
    return sp.solve(nums, [a, b, c, d], dict=True), K


if __name__ == "__main__":
    print("YBE holds:", ybe_check())
    sols, K = solve()
    for s in sols:
        Ks = K.subs(s)
        print("solution:", Ks.tolist(), " det =", sp.factor(Ks.det()))


def check_twisted(K, T):
    """K1 R21^phi K2 R12 = R21^{phi,phi} K2 R12^phi K1 with R^phi = (T x 1) R (T x 1)^-1."""
    Rphi = kron(T, I2) * R * kron(T, I2).inv()
    Rphiphi = kron(T, T) * R * kron(T, T).inv()
    K1 = kron(K, I2)
    K2 = P * K1 * P
    lhs = K1 * (P * Rphi * P) * K2 * R
    rhs = (P * Rphiphi * P) * K2 * Rphi * K1
    return sp.simplify(lhs - rhs) == sp.zeros(4, 4), Rphi


def frozen():
    K = sp.Matrix([[q - 1 / q, q], [1, 0]])
    ok_untwisted, _ = check_twisted(K, I2)
    T = sp.diag(1, -1)
    Ktw = T * K
    ok_twisted, Rphi = check_twisted(Ktw, T)
    return K, ok_untwisted, Ktw, ok_twisted, Rphi


if __name__ == "__main__":
    K, ok_u, Ktw, ok_t, Rphi = frozen()
    print("frozen K:", K.tolist(), "untwisted ok:", ok_u)
    print("twisted K = T*K:", Ktw.tolist(), "twisted ok:", ok_t)
    print("Rphi:", Rphi.tolist())
    # a generic-looking non-solution for negative tests
    bad = sp.Matrix([[1, 0], [0, q]])
    print("diag(1,q) solves untwisted:", check_twisted(bad, I2)[0])
