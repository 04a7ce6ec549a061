"""
Certifying that GL_E is not representable
=========================================

Emit the JSON certificate for Z/2 + Z/4 over Z/4, then re-validate it from
scratch.  The same seed always gives the same bytes.
"""

import json

from modforge import FPModule, certify_nonrepresentable, gl_points, recheck, zmod
from modforge.serialize import dumps

R = zmod(4)
E = FPModule.from_matrix(R, [[(2,)], [(0,)]])
print("|GL_E(Z/4)| =", gl_points(E).order)

cert = certify_nonrepresentable(R, E, seed=0)
text = dumps(cert.to_json())
doc = json.loads(text)
print("verdict:", doc["verdict"])
print("kernel size:", doc["kernel_size"], " phantom points:", doc["phantom_family_size"])
print("congruence evaluations:", doc["congruence_report"]["evaluations"],
      "failures:", doc["congruence_report"]["failures"])

report = recheck(doc)
print("recheck valid:", report.valid)
print("same bytes on a second run:", dumps(certify_nonrepresentable(R, E, seed=0).to_json()) == text)
