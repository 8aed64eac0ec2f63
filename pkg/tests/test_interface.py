import csv
import json
import math

import pytest
from fastapi.testclient import TestClient

from armkin.cli import main
from armkin.service import create_app


# ---------------------------------------------------------------- CLI


def test_cli_reach(capsys):
    assert main(["reach", "--lengths", "5,1,1"]) == 0
    assert capsys.readouterr().out.strip() == "lo=3 hi=7"


def test_cli_classify(capsys):
    assert main(["classify", "--lengths", "2,2,1", "--z", "0.5"]) == 0
    assert capsys.readouterr().out.strip() == "components=2 block=LT_BOT class=III"


def test_cli_classify_unreachable(capsys):
    assert main(["classify", "--lengths", "5,1,1", "--z", "1"]) == 0
    assert capsys.readouterr().out.strip() == "components=0 block=unreachable class=I"


def test_cli_solve_json(capsys):
    assert main(["solve", "--lengths", "2,2", "--target", "2,2", "--format", "json"]) == 0
    body = json.loads(capsys.readouterr().out)
    cfgs = body["configurations"]
    assert len(cfgs) == 2
    assert cfgs[0] == pytest.approx([math.pi / 2, 0.0], abs=1e-9)
    assert cfgs[1] == pytest.approx([0.0, math.pi / 2], abs=1e-9)
    assert body["components"] == 2


def test_cli_solve_text_and_unreachable(capsys):
    assert main(["solve", "--lengths", "2,1", "--target", "3,0"]) == 0
    out = capsys.readouterr().out
    assert "components=1" in out and "config1: 0 0" in out

    assert main(["solve", "--lengths", "5,1,1", "--target", "1,0"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("unreachable")
    assert "reach_lo=3" in out and "reach_hi=7" in out


def test_cli_sweep_csv_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "rows.csv"
    rc = main(
        [
            "sweep",
            "--lengths",
            "2,2,1",
            "--from",
            "0.2",
            "--to",
            "3.2",
            "--steps",
            "7",
            "--out",
            str(out_file),
        ]
    )
    assert rc == 0
    with open(out_file) as fh:
        rows = list(csv.reader(fh))
    header, data = rows[0], rows[1:]
    assert header[:3] == ["z", "block", "components"]
    assert header[3:] == [f"ik1_theta{i}" for i in range(3)] + [
        f"ik2_theta{i}" for i in range(3)
    ]
    assert len(data) == 7
    for row in data:
        float(row[0])
        int(row[2])
        for cell in row[3:]:
            float(cell)


def test_cli_oracle(capsys):
    assert main(["oracle", "--lengths", "2,2,1", "--z", "0.5", "--resolution", "32"]) == 0
    assert capsys.readouterr().out.strip() == "components=2"


def test_cli_validation_errors(capsys):
    assert main(["classify", "--lengths", "2,2,1", "--z", "-1"]) == 2
    assert main(["reach", "--lengths", "abc"]) == 2
    assert main(["solve", "--lengths", "2,1", "--target", "nope"]) == 2
    assert main(["nope"]) == 2
    assert main(["sweep", "--lengths", "2,1", "--from", "1", "--to", "1",
                 "--steps", "5", "--out", "/tmp/x.csv"]) == 2


def test_cli_presets(capsys):
    assert main(["presets"]) == 0
    out = capsys.readouterr().out
    assert "2.0,2.0,1.0" in out.replace(" ", "")


# ---------------------------------------------------------------- service


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_service_solve_single(client):
    r = client.get("/api/arm/solve", params={"lengths": "2,1", "qx": 3, "qy": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["v"] == 1
    assert body["components"] == 1
    assert body["configurations"] == [[0.0, 0.0]]
    assert body["agreement"] is True


def test_service_solve_pair(client):
    r = client.get("/api/arm/solve", params={"lengths": "2,2,1", "qx": 0.5, "qy": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["components"] == 2
    assert len(body["configurations"]) == 2
    assert body["agreement"] is False
    assert body["certificate"] == "Different"
    assert body["block"] == "LT_BOT"
    assert body["path_class"] == "III"
    assert body["vital"] == pytest.approx([3.0, 1.0])


def test_service_unreachable(client):
    r = client.get("/api/arm/solve", params={"lengths": "5,1,1", "qx": 1, "qy": 0})
    assert r.status_code == 422
    body = r.json()
    assert body["error"] == "unreachable"
    assert body["reach"] == pytest.approx([3.0, 7.0])


def test_service_info(client):
    r = client.get("/api/arm/info", params={"lengths": "4,3,2,0.5"})
    assert r.status_code == 200
    body = r.json()
    assert body["path_class"] == "II"
    assert body["transitions"]["A"]["z"] == pytest.approx(4.5)
    assert body["vital"] == pytest.approx([4.5, 3.5, 0.5])
    assert body["sorted_lengths"] == [4.0, 3.0, 2.0, 0.5]


def test_service_rotated_target(client):
    r = client.get("/api/arm/solve", params={"lengths": "2,2", "qx": 2, "qy": 2})
    body = r.json()
    assert len(body["configurations"]) == 2
    assert body["configurations"][0] == pytest.approx([math.pi / 2, 0.0], abs=1e-9)
    assert body["rho"] == pytest.approx(math.pi / 4)


def test_service_validation(client):
    assert client.get("/api/arm/info", params={"lengths": "bogus"}).status_code == 400
    assert (
        client.get("/api/arm/solve", params={"lengths": "1,-2", "qx": 1, "qy": 0}).status_code
        == 400
    )
    assert (
        client.get("/api/arm/solve", params={"lengths": "2,1", "qx": 0, "qy": 0}).status_code
        == 400
    )


def test_service_presets(client):
    r = client.get("/api/presets")
    assert r.status_code == 200
    presets = r.json()["presets"]
    assert len(presets) >= 3
    assert any(p["lengths"] == [2.0, 2.0, 1.0] for p in presets)


def test_service_stateless_byte_identical(client):
    params = {"lengths": "3.1,2.7,1.3", "qx": 1.234, "qy": -2.345}
    first = client.get("/api/arm/solve", params=params).content
    second = client.get("/api/arm/solve", params=params).content
    assert first == second


def test_service_rejects_non_finite(client):
    for params in (
        {"lengths": "inf,1", "qx": 1, "qy": 0},
        {"lengths": "2,1", "qx": "inf", "qy": 0},
        {"lengths": "nan,1", "qx": 1, "qy": 0},
    ):
        assert client.get("/api/arm/solve", params=params).status_code == 400
