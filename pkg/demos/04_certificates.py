"""
Certificates
============

The same checks as a machine-readable certificate, plus a negative control:
corrupting one entry of pi(b) must flip claims to falsified.
"""

from polcert.cert import RunConfig, render_markdown, verify

cert = verify("char0", RunConfig(), threads=1)
print(render_markdown(cert.to_dict()).split("\n## ")[0])

bad = verify("char0", RunConfig(corrupt=["pi_b"]), threads=1)
print({r.claim_id: r.verdict for r in bad.sorted_records()})
