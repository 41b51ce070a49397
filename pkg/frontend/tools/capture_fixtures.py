"""Capture real service responses as frontend test fixtures.

Run from the repository root after installing the Python package:
    python3 frontend/tools/capture_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from arasrank.datasets import case_study
from arasrank.io_formats import matrix_to_json_dict
from arasrank.sensitivity import swept_weights
from arasrank.service import create_app

OUT = Path(__file__).parent.parent / "tests" / "fixtures" / "service_fixtures.json"

client = TestClient(create_app())
matrix, weights = case_study()
matrix_doc = matrix_to_json_dict(matrix)
baseline = list(weights)

STRIP_GRID = [(i + 1) * 0.05 for i in range(19)]

CONSISTENT_3 = [[1, 2, 4], [0.5, 1, 2], [0.25, 0.5, 1]]
FIXTURE_3 = [[1, 3, 5], [1 / 3, 1, 3], [1 / 5, 1 / 3, 1]]
INCONSISTENT_3 = [[1, 9, 1 / 9], [1 / 9, 1, 9], [9, 1 / 9, 1]]

requests = []

def grab(path, body):
    resp = client.post(path, json=body)
    requests.append(
        {"path": path, "body": body, "status": resp.status_code, "response": resp.json()}
    )

def eval_body(w, mode="paper-2011"):
    return {"matrix": matrix_doc, "weights": list(w), "mode": mode}

grab("/api/evaluate", eval_body(baseline))
grab("/api/evaluate", eval_body(baseline, mode="standard"))
for g in (0.2, 0.5):
    grab("/api/evaluate", eval_body(swept_weights(weights, 1, g)))
grab("/api/ahp/weights", {"matrices": [CONSISTENT_3]})
grab("/api/ahp/weights", {"matrices": [FIXTURE_3]})
grab("/api/ahp/weights", {"matrices": [INCONSISTENT_3]})
for w in (baseline, list(swept_weights(weights, 1, 0.2)), list(swept_weights(weights, 1, 0.5))):
    grab(
        "/api/sensitivity",
        {
            "matrix": matrix_doc,
            "weights": w,
            "mode": "paper-2011",
            "criterion": "ROR",
            "grid": STRIP_GRID,
        },
    )

OUT.write_text(json.dumps(requests, indent=2) + "\n", encoding="utf-8")
print(f"wrote {OUT} with {len(requests)} exchanges")
