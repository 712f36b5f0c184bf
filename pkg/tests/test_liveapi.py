from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from blockwords.liveapi import create_app
from blockwords.world import Action, BlockSet, WorldState, apply


@pytest.fixture(scope="module")
def client(bundled_lexicon):
    return TestClient(create_app(bundled_lexicon))


def create_session(client, **overrides) -> dict:
    body = {
        "letters": ["p", "i", "n", "k", "t"],
        "method": "sips",
        "n_particles": 10,
        "seed": 11,
    }
    body.update(overrides)
    response = client.post("/sessions", json=body)
    assert response.status_code == 201, response.text
    return response.json()


def test_create_session_all_on_table(client):
    data = create_session(client)
    assert data["v"] == 1
    assert len(data["state"]["towers"]) == 5
    assert all(len(t) == 1 for t in data["state"]["towers"])
    assert data["state"]["held"] is None
    # five height-1 towers: five pick-up actions
    assert len(data["legal_actions"]) == 5
    assert all(a["kind"] == "pick-up" for a in data["legal_actions"])
    assert len(data["session_id"]) == 32  # 128-bit hex token


def test_create_session_validation(client):
    assert client.post("/sessions", json={"letters": ["3"]}).status_code == 400
    assert client.post("/sessions", json={"letters": []}).status_code == 400
    assert (
        client.post("/sessions", json={"letters": ["a"], "method": "nope"}).status_code
        == 400
    )
    # unspellable letter sets are rejected up front
    assert client.post("/sessions", json={"letters": ["z"]}).status_code == 400


def test_post_action_updates_posterior(client):
    data = create_session(client, initial_towers=[[2, 3], [0], [1], [4]])
    sid = data["session_id"]
    # pick up i then stack on n -> ink tower; ink/pink should surface
    for body in [
        {"kind": "pick-up", "subject": 1},
        {"kind": "stack", "subject": 1, "target": 2},
    ]:
        response = client.post(f"/sessions/{sid}/actions", json=body)
        assert response.status_code == 200, response.text
        data = response.json()
        assert data["latency_seconds"] < 5.0
    words = {w["word"] for w in data["posterior"]["top_words"]}
    assert words & {"ink", "pink"}
    assert data["step"] == 2
    total = data["posterior"]["total_probability"]
    assert data["posterior"]["degenerate"] or abs(total - 1.0) < 1e-6


def test_illegal_action_leaves_state_unchanged(client):
    data = create_session(client, initial_towers=[[2, 3], [0], [1], [4]])
    sid = data["session_id"]
    before = client.get(f"/sessions/{sid}").json()
    # block 3 (k) is buried under n
    response = client.post(
        f"/sessions/{sid}/actions", json={"kind": "pick-up", "subject": 3}
    )
    assert response.status_code == 400
    after = client.get(f"/sessions/{sid}").json()
    assert after["state"] == before["state"]
    assert after["step"] == before["step"]


def test_unknown_session_404(client):
    assert client.get("/sessions/deadbeef").status_code == 404
    assert (
        client.post("/sessions/deadbeef/actions", json={"kind": "pick-up", "subject": 0}).status_code
        == 404
    )


def test_get_state_history_replay(client):
    data = create_session(client)
    sid = data["session_id"]
    actions = [
        {"kind": "pick-up", "subject": 2},
        {"kind": "stack", "subject": 2, "target": 3},
        {"kind": "pick-up", "subject": 1},
    ]
    for body in actions:
        assert client.post(f"/sessions/{sid}/actions", json=body).status_code == 200
    data = client.get(f"/sessions/{sid}").json()
    assert len(data["history"]) == 3
    # replaying the returned history reproduces the returned state
    state = WorldState.all_on_table(range(5))
    for item in data["history"]:
        state = apply(state, Action(item["kind"], item["subject"], item["target"]))
    assert [list(t) for t in state.towers] == data["state"]["towers"]
    assert state.held == data["state"]["held"]


def test_undo_replays_deterministically(client):
    data = create_session(client, initial_towers=[[2, 3], [0], [1], [4]], seed=99)
    sid = data["session_id"]
    first = client.post(
        f"/sessions/{sid}/actions", json={"kind": "pick-up", "subject": 1}
    ).json()
    second = client.post(
        f"/sessions/{sid}/actions", json={"kind": "stack", "subject": 1, "target": 2}
    ).json()
    undone = client.post(f"/sessions/{sid}/undo").json()
    assert undone["step"] == 1
    assert undone["state"] == first["state"]
    assert undone["posterior"]["top_words"] == first["posterior"]["top_words"]
    redone = client.post(
        f"/sessions/{sid}/actions", json={"kind": "stack", "subject": 1, "target": 2}
    ).json()
    assert redone["posterior"]["top_words"] == second["posterior"]["top_words"]
    assert redone["state"] == second["state"]


def test_undo_empty_history_error(client):
    sid = create_session(client)["session_id"]
    assert client.post(f"/sessions/{sid}/undo").status_code == 400


def test_exact_method_session(client):
    data = create_session(client, method="exact", letters=["i", "n", "k", "p"])
    sid = data["session_id"]
    # fresh exact session: prior-proportional snapshot over the support
    assert data["posterior"]["total_probability"] == pytest.approx(1.0, abs=1e-6)
    response = client.post(
        f"/sessions/{sid}/actions", json={"kind": "pick-up", "subject": 1}
    )
    assert response.status_code == 200
    assert response.json()["posterior"]["total_probability"] == pytest.approx(1.0, abs=1e-6)


def test_proposal_only_session(client):
    data = create_session(client, method="proposal_only", initial_towers=[[2, 3], [0], [1], [4]])
    sid = data["session_id"]
    assert data["posterior"]["degenerate"]  # no action yet
    client.post(f"/sessions/{sid}/actions", json={"kind": "pick-up", "subject": 1})
    out = client.post(
        f"/sessions/{sid}/actions", json={"kind": "stack", "subject": 1, "target": 2}
    ).json()
    assert out["posterior"]["top_words"]


def test_stream_emits_snapshot(client):
    data = create_session(client, initial_towers=[[2, 3], [0], [1], [4]])
    sid = data["session_id"]
    client.post(f"/sessions/{sid}/actions", json={"kind": "pick-up", "subject": 1})
    with client.stream("GET", f"/sessions/{sid}/stream", params={"max_events": 1}) as response:
        assert response.status_code == 200
        for line in response.iter_lines():
            if line.startswith("data: "):
                event = json.loads(line[len("data: "):])
                assert event["v"] == 1
                assert event["step"] == 1
                break
