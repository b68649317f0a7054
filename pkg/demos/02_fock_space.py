"""The Fock space at e = 2: divided powers, ladders and first approximations."""

from specht import (
    FockVector,
    apply_divided_power,
    first_approximation,
    ladder_sequence,
    quantum_integer,
)

vac = FockVector.vacuum()
x = apply_divided_power(vac, 0, 1, 2)
print("f_0 |0>      =", x)
print("f_1 |1>      =", apply_divided_power(x, 1, 1, 2))
print("f_1^(2) |1>  =", apply_divided_power(x, 1, 2, 2))

# f_1 f_1 = [2] f_1^(2)
lhs = apply_divided_power(apply_divided_power(x, 1, 1, 2), 1, 1, 2)
rhs = apply_divided_power(x, 1, 2, 2).scale(quantum_integer(2))
print("f_1 f_1 |1> == [2] f_1^(2) |1>:", lhs == rhs)
print()

# ladder data and the vector it produces
for mu in [(3,), (2, 1), (5,), (3, 2)]:
    print(mu, "ladders", ladder_sequence(mu, 2))
    print("   A =", first_approximation(mu, 2))
