"""Decomposition matrices at v = 1 for e in {2, 3} and n <= 6.

Row label to ``{column label: multiplicity}``, zero entries omitted, partitions
in exponent notation. Produced once by ``oracles.decomposition_table`` (Specht
modules built inside the Hecke algebra, no Fock space involved) and frozen here.
"""

TABLES = {
    2: {
        1: {
            "1": {"1": 1},
        },
        2: {
            "2": {"2": 1},
            "1^2": {"2": 1},
        },
        3: {
            "3": {"3": 1},
            "2,1": {"2,1": 1},
            "1^3": {"3": 1},
        },
        4: {
            "4": {"4": 1},
            "3,1": {"4": 1, "3,1": 1},
            "2^2": {"3,1": 1},
            "2,1^2": {"4": 1, "3,1": 1},
            "1^4": {"4": 1},
        },
        5: {
            "5": {"5": 1},
            "4,1": {"4,1": 1},
            "3,2": {"3,2": 1},
            "3,1^2": {"5": 1, "3,2": 1},
            "2^2,1": {"3,2": 1},
            "2,1^3": {"4,1": 1},
            "1^5": {"5": 1},
        },
        6: {
            "6": {"6": 1},
            "5,1": {"6": 1, "5,1": 1},
            "4,2": {"5,1": 1, "4,2": 1},
            "4,1^2": {"6": 1, "5,1": 1, "4,2": 1},
            "3^2": {"4,2": 1},
            "3,2,1": {"3,2,1": 1},
            "3,1^3": {"6": 1, "5,1": 1, "4,2": 1},
            "2^3": {"4,2": 1},
            "2^2,1^2": {"5,1": 1, "4,2": 1},
            "2,1^4": {"6": 1, "5,1": 1},
            "1^6": {"6": 1},
        },
    },
    3: {
        1: {
            "1": {"1": 1},
        },
        2: {
            "2": {"2": 1},
            "1^2": {"1^2": 1},
        },
        3: {
            "3": {"3": 1},
            "2,1": {"3": 1, "2,1": 1},
            "1^3": {"2,1": 1},
        },
        4: {
            "4": {"4": 1},
            "3,1": {"3,1": 1},
            "2^2": {"4": 1, "2^2": 1},
            "2,1^2": {"2,1^2": 1},
            "1^4": {"2^2": 1},
        },
        5: {
            "5": {"5": 1},
            "4,1": {"4,1": 1},
            "3,2": {"4,1": 1, "3,2": 1},
            "3,1^2": {"3,1^2": 1},
            "2^2,1": {"5": 1, "2^2,1": 1},
            "2,1^3": {"2^2,1": 1},
            "1^5": {"3,2": 1},
        },
        6: {
            "6": {"6": 1},
            "5,1": {"6": 1, "5,1": 1},
            "4,2": {"4,2": 1},
            "4,1^2": {"5,1": 1, "4,1^2": 1},
            "3^2": {"5,1": 1, "3^2": 1},
            "3,2,1": {"6": 1, "5,1": 1, "4,1^2": 1, "3^2": 1, "3,2,1": 1},
            "3,1^3": {"4,1^2": 1, "3,2,1": 1},
            "2^3": {"6": 1, "3,2,1": 1},
            "2^2,1^2": {"2^2,1^2": 1},
            "2,1^4": {"3^2": 1, "3,2,1": 1},
            "1^6": {"3^2": 1},
        },
    },
}
