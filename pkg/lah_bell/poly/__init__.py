# Exact polynomials, Bell-type families and Spivey recurrences
