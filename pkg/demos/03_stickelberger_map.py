"""
The Stickelberger map
=====================

Theta sends a virtual character to a rational combination of group
elements. It lands in ZG exactly on the kernel A_G of the determinant.
"""
from steinitz.characters import character_table, regular_character, VirtualCharacter
from steinitz.group import parse_group
from steinitz.stickelberger import (
    AG_index, in_AG, stickelberger_module, theta_bar, theta_json, theta_regular_closed_form,
)

T = character_table(parse_group("perm:3:(1 2),(1 2 3)"))
rho = regular_character(T)

# on S3 the transpositions have odd index, so Theta(rho) is only half-integral
for row in theta_json(T, theta_bar(T, rho)):
    print(row)
print("closed form agrees:", theta_regular_closed_form(T.classes) == theta_bar(T, rho))
print("rho in A_G:", in_AG(T, rho), " 2 rho in A_G:", in_AG(T, rho * 2))

std = VirtualCharacter.basis(len(T), T.degrees.index(2))
print("standard character integral:", theta_bar(T, std).is_integral())

print("[R_G : A_G] =", AG_index(T))
print("S_G basis (class sums):", stickelberger_module(T, classes=True))
