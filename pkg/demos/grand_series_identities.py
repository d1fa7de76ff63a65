"""Grand canonical series: defining sums against their closed forms.

For each statistics the grand series is computed twice, once by summing
Schur values over all admitted shapes order by order, once from the closed
product (or determinant ratio). The comparison is coefficientwise exact.
"""

from schurgas.series import gpf_definition, gpf_parafermi_det, gpf_product, verify_identity
from schurgas.statistics import FERMI, HST, parse_kind

point = (2, 3, 5)
nmax = 6

for name in ("bose", "fermi", "hst", "even-rows", "even-cols", "parafermi:2"):
    report = verify_identity(parse_kind(name), point, nmax)
    status = "exact match" if report.equal else f"MISMATCH at z^{report.first_mismatch}"
    print(f"{name:<12} {status}")
    print("   coeffs:", [str(c) for c in report.lhs.coeffs])

print()
print("the row-bound family interpolates between fermi and no restriction:")
fermi = gpf_product(FERMI, point, nmax)
free = gpf_definition(HST, point, nmax)
for p in (1, 2, 3, 4, 6):
    det = gpf_parafermi_det(p, point, nmax)
    tag = ""
    if det == fermi:
        tag = "  (= fermi product)"
    if det == free:
        tag = "  (= unrestricted sum)"
    print(f"  p={p}: z^3 coefficient {det.coeffs[3]}{tag}")
