"""Literature constants shown next to computed results (never computed here)."""

# Orbifold (rational) Euler characteristics chi(Out F_n), rounded to two
# decimals; display only.
RATIONAL_EULER_OUT_FN: dict[int, str] = {
    2: "-0.04",
    3: "-0.02",
    4: "-0.02",
    5: "-0.06",
    6: "-0.20",
    7: "-0.87",
    8: "-4.58",
    9: "-28.52",
    10: "-205.83",
    11: "-1690.70",
}
