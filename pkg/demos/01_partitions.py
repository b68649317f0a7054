"""Young diagrams, hook lengths and the predicates the classifier is built from."""

from specht import (
    conjugate,
    format_partition,
    hook_lengths,
    is_broken,
    is_doubly_singular,
    is_e_core,
    is_e_jm,
    last_repeat_row,
    parse_partition,
)
from specht.render import render_diagram

la = parse_partition("4^2,1")
print(format_partition(la), "conjugate:", format_partition(conjugate(la)))
print(render_diagram(la, "hooks"))
print()

# residues mod 2 along the diagonals
print(render_diagram(la, "residues", 2))
print()

# 4^2,1 is unbroken and doubly-singular; no hook is divisible by 10
print("doubly singular:", is_doubly_singular(la))
print("broken:", is_broken(la))
print("10-core:", is_e_core(la, 10), " 10-JM:", is_e_jm(la, 10))
print("hooks:", sorted(hook_lengths(la).values(), reverse=True))

# a repeated part below a gap breaks a partition
for text in ["4,2^2", "5,1", "5,1^2", "3,2^2,1^2"]:
    mu = parse_partition(text)
    print(f"{text:>10}  broken={is_broken(mu)!s:5}  last repeat row={last_repeat_row(mu)}")
