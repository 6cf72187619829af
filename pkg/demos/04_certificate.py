"""End to end: a certified ropelength lower bound for each fixture."""

from ropebound.bounds import BoundsCertificate, certify, verify_certificate
from ropebound.lattice import FIXTURES, load_fixture

for name in FIXTURES:
    cert = certify(load_fixture(name))
    x, y, z = cert.steps
    print(f"{name}: {cert.summary()}")
    print(f"  sum_n={cert.sum_n} x+y={x + y} L={cert.L_total}")
    for check, verdict in cert.checks.items():
        print(f"  {check:22s} {verdict}")

# a certificate is plain JSON and can be re-checked without the pipeline
text = cert.to_json()
again = BoundsCertificate.from_json(text)
print("round trip equal:", again == cert, " re-verified:", verify_certificate(again))
