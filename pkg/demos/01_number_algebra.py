"""Arithmetic and ordering of single bipolar neutrosophic numbers.

Run with ``python demos/01_number_algebra.py``.
"""

from bnses import BNN, accuracy, add, certainty, compare, multiply, power, scale, score

a = BNN(0.5, 0.3, 0.2, -0.4, -0.3, -0.2)
b = BNN(0.6, 0.2, 0.4, -0.1, -0.5, -0.6)

print("a       =", a)
print("b       =", b)
print("a + b   =", add(a, b))
print("a * b   =", multiply(a, b))
print("2 a     =", scale(2, a))
print("a ** 2  =", power(a, 2))

# %% score, accuracy, certainty
for name, v in [("a", a), ("b", b), ("zero", BNN.zero())]:
    print(f"{name:>5}: score={score(v):.4f} accuracy={accuracy(v):+.2f} certainty={certainty(v):.2f}")

# %% comparison falls through to accuracy and then certainty when scores tie
half = BNN(0.5, 0.5, 0.5, -0.5, -0.5, -0.5)
print("score(half) == score(zero):", score(half) == score(BNN.zero()))
print("compare(half, zero) ->", compare(half, BNN.zero()).name)
print("compare(a, b)       ->", compare(a, b).name)

# %% out-of-range components are rejected rather than clamped
try:
    BNN(0.3, 0.5, 0.7, 0.2, -0.3, -0.4)
except ValueError as exc:
    print("rejected:", exc)
