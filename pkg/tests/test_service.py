"""HTTP layer: routes, response envelope, error mapping."""

import pytest
from fastapi.testclient import TestClient

from fermatcover.service import OPERATIONS, create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_index_lists_every_operation(client):
    body = client.get("/").json()
    assert body["name"] == "fermatcover"
    listed = {op["name"] for op in body["operations"]}
    assert listed == set(OPERATIONS)
    paths = {op["path"] for op in body["operations"]}
    assert len(paths) == len(OPERATIONS)


def test_response_envelope(client):
    resp = client.post("/genus", json={"g": 2, "k": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["operation"] == "genus"
    assert body["passed"] is True
    assert body["report"]["cover_genus"] == 17


def test_failed_certificate_is_still_200(client):
    resp = client.post("/sylow-cert", json={"g": 2, "p": 83})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is False
    assert body["report"]["conclusion"] == "not-certified"
    assert 84 in body["report"]["candidate_counts"]


def test_validation_errors_are_422(client):
    assert client.post("/genus", json={"g": 1, "k": 2}).status_code == 422
    assert client.post("/genus", json={"g": 2}).status_code == 422
    assert client.post("/genus", json={"g": 2, "k": 2, "zz": 1}).status_code == 422


def test_domain_errors_are_400_with_code(client):
    resp = client.post("/curve/verify", json={"g": 2, "q": 13, "lambdas": [0, 1, 2]})
    assert resp.status_code == 400
    assert resp.json()["code"] == "bad-lambda"
    resp = client.post(
        "/curve/verify", json={"g": 2, "q": 13, "lambdas": [2, 4, 5], "budget": 5}
    )
    assert resp.status_code == 400
    assert resp.json()["code"] == "enumeration-too-large"
    resp = client.post("/cover/s-values", json={"k": 3, "p": 3, "r": 3})
    assert resp.status_code == 400
    assert resp.json()["code"] == "hypothesis-violated"


def test_homology_endpoint_with_inline_presentation(client):
    pres = client.post(
        "/presentation", json={"kind": "surface", "genus": 2}
    ).json()["report"]
    resp = client.post("/homology", json={"presentation": pres, "k": 3})
    assert resp.status_code == 200
    body = resp.json()["report"]
    assert body["invariants"]["descriptor"] == "Z_3^4"
    assert body["order"] == 81


def test_orbifold_presentation_endpoint(client):
    resp = client.post(
        "/presentation",
        json={"kind": "orbifold", "genus": 0, "cone_orders": [2, 2, 2, 2, 2, 2]},
    )
    pres = resp.json()["report"]
    assert pres["generator_count"] == 6
    homology = client.post("/homology", json={"presentation": pres, "k": 2}).json()
    assert homology["report"]["invariants"]["descriptor"] == "Z_2^5"
    bad = client.post("/presentation", json={"kind": "orbifold", "genus": 0})
    assert bad.status_code == 422


def test_curve_endpoints(client):
    payload = {"g": 2, "q": 13, "lambdas": [2, 4, 5]}
    body = client.post("/curve/points", json=payload).json()
    assert body["report"]["point_count"] == 32
    assert body["report"]["points"][0][0] in (0, 1)
    body = client.post("/curve/free-subgroup", json=payload).json()
    assert body["passed"] is True
    assert body["report"]["conclusion"] == "unique-free-index-two"
    body = client.post("/curve/fixed-points", json={"g": 2, "q": 41, "lambdas": [2, 10, 33]}).json()
    assert body["passed"] is True


def test_case_endpoints(client):
    body = client.post(
        "/curve/case-a", json={"g": 2, "lambdas": [6, 2, 3], "num_primes": 1}
    ).json()
    assert body["passed"] is True
    assert body["report"]["conclusion"] == "fixed-point-exists"
    body = client.post(
        "/curve/case-a", json={"g": 2, "lambdas": ["1/2", "1/4", "2"], "num_primes": 1}
    ).json()
    assert body["passed"] is True
    body = client.post(
        "/curve/case-b", json={"g": 2, "q": 13, "lambdas": [12, 3, 10]}
    ).json()
    assert body["report"]["square_label"] == "a2"
    resp = client.post("/curve/case-b", json={"g": 2, "q": 7, "lambdas": [6, 3, 4]})
    assert resp.status_code == 400
    assert resp.json()["code"] == "field-insufficient"


def test_cover_endpoints(client):
    body = client.post(
        "/cover/kernel", json={"k": 3, "theta": [[1, 0, 0, 0], [0, 1, 0, 0]]}
    ).json()
    assert body["report"]["kernel_order"] == 9
    body = client.post("/cover/fiber-check", json={"g": 2, "k": 2}).json()
    assert body["passed"] is True
    body = client.post("/cover/gilman", json={"p": 3, "r": 3, "k": 2}).json()
    assert body["report"]["rows"] == [[0, -1], [1, -1]]
    assert body["report"]["order_mod_k"] == 3
    body = client.post(
        "/cover/closure",
        json={"k": 2, "p": 3, "r": 3, "kernel_basis": [[1, 0]]},
    ).json()
    assert body["report"]["deck_order"] == 12
    assert body["report"]["descriptor"] == "Z_2^2 x| Z_3"
    body = client.post("/cover/s-values", json={"k": 2, "p": 3, "r": 3}).json()
    assert body["report"]["s_values"] == [0, 2]
    body = client.post("/cover/lift-exponent", json={"k": 4, "p": 3}).json()
    assert body["report"]["exponent"] == 4


def test_closure_rejects_mismatched_rows(client):
    resp = client.post(
        "/cover/closure",
        json={"k": 2, "p": 3, "r": 3, "kernel_basis": [[1, 0, 0]]},
    )
    assert resp.status_code == 422


def test_not_surjective_maps_to_400(client):
    resp = client.post("/cover/kernel", json={"k": 4, "theta": [[2, 0], [0, 2]]})
    assert resp.status_code == 400
    assert resp.json()["code"] == "not-surjective"
