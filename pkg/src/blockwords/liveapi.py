"""Live inference service: stack blocks over HTTP and watch the goal
posterior update after every action.

Sessions are in-memory and single-writer (a per-session lock serializes
concurrent action posts). Undo recomputes the whole inference state by
replaying the shortened history under the session's fixed seed, which is
exact because every random draw is keyed by (seed, step, slot).

Endpoints (JSON, snake_case, schema version field ``v``):
    POST /sessions                   create a session
    GET  /sessions/{id}              full state + posterior + history
    POST /sessions/{id}/actions      apply one action, get updated posterior
    POST /sessions/{id}/undo         roll back the last action
    GET  /sessions/{id}/stream       server-sent events with posterior updates
"""

from __future__ import annotations

import asyncio
import json
import math
import secrets
import threading
import time
from dataclasses import dataclass, field

import numpy as np
from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import StreamingResponse
from pydantic import BaseModel, Field

from .harness import EXACT, METHODS, PROPOSAL_ONLY, SIPS, MethodSpec, load_bundled_lexicon
from .inference import (
    InferenceConfig,
    ParticleCollection,
    PosteriorSnapshot,
    sips_init,
    sips_step,
)
from .lexicon import Lexicon, Trie, goal_prior, train_ngram
from .planner import Policy, step_loglik
from .proposal import NoFeasibleProposalError, ProposalConfig, propose
from .world import Action, BlockSet, IllegalActionError, WorldState, apply, legal_actions

PROTOCOL_VERSION = 1
DEFAULT_TOP_K = 5


class CreateSessionRequest(BaseModel):
    letters: list[str]
    method: str = SIPS
    n_particles: int = 20
    beta: float = 1.0
    budget: int = 100
    cadence: int = 2
    strategy: str = "bfs"
    proposal: str = "last_and_next"
    word_temperature: float = Field(default=4.0, ge=1.0)
    termination_bias: float = Field(default=0.05, ge=0.0, lt=1.0)
    seed: int | None = None
    initial_towers: list[list[int]] | None = None
    top_k: int = DEFAULT_TOP_K


class ActionRequest(BaseModel):
    kind: str
    subject: int
    target: int | None = None


def _stream_rng(seed: int, step: int, slot: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed, step, slot)))


class SessionEngine:
    """Incremental inference for one session, method-agnostic."""

    def __init__(self, method: str, blocks: BlockSet, initial: WorldState,
                 config: InferenceConfig, n: int, seed: int):
        self.method = method
        self.blocks = blocks
        self.initial = initial
        self.config = config
        self.n = n
        self.seed = seed
        self.state = initial
        self.step = 0
        if method == SIPS:
            self.collection: ParticleCollection | None = ParticleCollection(
                n_target=n, seed=seed, initial=initial, state=initial
            )
        else:
            self.collection = None
        if method == EXACT:
            self.policies = {
                g: Policy(g, blocks, config.planner) for g in config.prior.support
            }
            self.cum_loglik = {g: 0.0 for g in self.policies}
        self.evaluations = 0
        self.last_action: Action | None = None

    def apply_action(self, action: Action) -> None:
        step = self.step + 1
        if self.method == SIPS:
            sips_step(self.collection, action, self.config)
            self.state = self.collection.state
            self.evaluations = self.collection.evaluations
        elif self.method == EXACT:
            for g, policy in self.policies.items():
                self.cum_loglik[g] += step_loglik(
                    policy, self.state, action, step, self.config.planner
                )
                self.evaluations += 1
            self.state = apply(self.state, action)
        else:
            self.state = apply(self.state, action)
        self.step = step
        self.last_action = action

    def snapshot(self) -> PosteriorSnapshot:
        if self.method == SIPS:
            return self.collection.snapshot()
        if self.method == EXACT:
            scores = {
                g: self.config.prior.log(g) + ll for g, ll in self.cum_loglik.items()
            }
            peak = max(scores.values())
            raw = {g: math.exp(s - peak) for g, s in scores.items()}
            total = sum(raw.values())
            return PosteriorSnapshot(
                self.step,
                {g: v / total for g, v in raw.items()},
                len(raw),
                self.evaluations,
            )
        # proposal-only: fresh guesses from the latest (state, action) pair
        if self.last_action is None:
            return PosteriorSnapshot(0, {}, 0, 0, degenerate=True)
        counts: dict[str, float] = {}
        for slot in range(self.n):
            rng = _stream_rng(self.seed, self.step, slot)
            try:
                sample = propose(self.state, self.last_action, self.config.proposal, rng)
            except NoFeasibleProposalError:
                continue
            counts[sample.word] = counts.get(sample.word, 0.0) + 1.0
        total = sum(counts.values())
        if total <= 0:
            return PosteriorSnapshot(self.step, {}, 0, 0, degenerate=True)
        return PosteriorSnapshot(
            self.step, {w: c / total for w, c in counts.items()}, len(counts), 0
        )


@dataclass
class Session:
    id: str
    method: str
    spec_request: CreateSessionRequest
    blocks: BlockSet
    engine: SessionEngine
    seed: int
    top_k: int
    history: list[Action] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    latencies: list[float] = field(default_factory=list)


def _action_to_dict(action: Action) -> dict:
    return {"kind": action.kind, "subject": action.subject, "target": action.target}


def _state_to_dict(state: WorldState) -> dict:
    return {"towers": [list(t) for t in state.towers], "held": state.held}


def _snapshot_to_dict(snap: PosteriorSnapshot, top_k: int) -> dict:
    return {
        "step": snap.step,
        "top_words": [{"word": w, "probability": p} for w, p in snap.top(top_k)],
        "unique_hypotheses": snap.unique_count,
        "evaluations": snap.evaluations,
        "degenerate": snap.degenerate,
        "total_probability": float(sum(snap.probs.values())),
    }


def create_app(lexicon: Lexicon | None = None) -> FastAPI:
    app = FastAPI(title="blockwords live inference", version="0.1.0")
    app.state.lexicon = lexicon or load_bundled_lexicon()
    app.state.sessions: dict[str, Session] = {}

    def get_session(session_id: str) -> Session:
        session = app.state.sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
        return session

    def build_engine(req: CreateSessionRequest, seed: int) -> tuple[BlockSet, SessionEngine]:
        for letter in req.letters:
            if len(letter) != 1 or not ("a" <= letter <= "z"):
                raise HTTPException(status_code=400, detail=f"invalid block letter {letter!r}")
        if not (1 <= len(req.letters) <= 26):
            raise HTTPException(status_code=400, detail="need 1-26 blocks")
        if req.method not in METHODS:
            raise HTTPException(status_code=400, detail=f"unknown method {req.method!r}")
        blocks = BlockSet.from_letters(req.letters)
        if req.initial_towers is not None:
            try:
                initial = WorldState(towers=tuple(tuple(t) for t in req.initial_towers))
                if initial.block_ids() != {b.id for b in blocks}:
                    raise ValueError("initial towers must use every block exactly once")
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        else:
            initial = WorldState.all_on_table(range(len(req.letters)))
        spec = MethodSpec(
            method=req.method,
            n_particles=req.n_particles,
            beta=req.beta,
            budget=req.budget,
            cadence=req.cadence,
            strategy=req.strategy,
            proposal=req.proposal,
            word_temperature=req.word_temperature,
            termination_bias=req.termination_bias,
        )
        try:
            prior = goal_prior(app.state.lexicon, blocks.letter_counts, spec.word_temperature)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        # the n-gram is fit on the same tempered frequencies as the prior,
        # i.e. on this session's spellable support
        supported = Lexicon({w: app.state.lexicon.entries[w] for w in prior.support})
        config = InferenceConfig(
            prior=prior,
            proposal=ProposalConfig(
                strategy=spec.proposal,
                ngram=train_ngram(
                    supported,
                    order=spec.ngram_order,
                    word_temperature=spec.word_temperature,
                    termination_bias=spec.termination_bias,
                ),
                trie=Trie.from_words(prior.support),
                blocks=blocks,
            ),
            planner=spec.planner_params(),
        )
        return blocks, SessionEngine(req.method, blocks, initial, config, req.n_particles, seed)

    def session_payload(session: Session) -> dict:
        snap = session.engine.snapshot()
        return {
            "v": PROTOCOL_VERSION,
            "session_id": session.id,
            "method": session.method,
            "step": session.engine.step,
            "blocks": [{"id": b.id, "letter": b.letter} for b in session.blocks],
            "state": _state_to_dict(session.engine.state),
            "legal_actions": [_action_to_dict(a) for a in legal_actions(session.engine.state)],
            "posterior": _snapshot_to_dict(snap, session.top_k),
            "history": [_action_to_dict(a) for a in session.history],
        }

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateSessionRequest) -> dict:
        seed = req.seed if req.seed is not None else secrets.randbits(32)
        blocks, engine = build_engine(req, seed)
        session = Session(
            id=secrets.token_hex(16),
            method=req.method,
            spec_request=req,
            blocks=blocks,
            engine=engine,
            seed=seed,
            top_k=req.top_k,
        )
        app.state.sessions[session.id] = session
        return session_payload(session)

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str) -> dict:
        return session_payload(get_session(session_id))

    @app.post("/sessions/{session_id}/actions")
    def post_action(session_id: str, req: ActionRequest) -> dict:
        session = get_session(session_id)
        with session.lock:
            try:
                action = Action(req.kind, req.subject, req.target)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            if action not in legal_actions(session.engine.state):
                raise HTTPException(
                    status_code=400, detail=f"action {req.kind} is not legal here"
                )
            start = time.perf_counter()
            try:
                session.engine.apply_action(action)
            except IllegalActionError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            latency = time.perf_counter() - start
            session.history.append(action)
            session.latencies.append(latency)
            payload = session_payload(session)
            payload["latency_seconds"] = latency
            return payload

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=400, detail="nothing to undo")
            history = session.history[:-1]
            _, engine = build_engine(session.spec_request, session.seed)
            for action in history:
                engine.apply_action(action)
            session.engine = engine
            session.history = history
            return session_payload(session)

    @app.get("/sessions/{session_id}/stream")
    async def stream(session_id: str, request: Request, max_events: int | None = None) -> StreamingResponse:
        session = get_session(session_id)

        async def events():
            last_step = -1
            sent = 0
            while max_events is None or sent < max_events:
                if await request.is_disconnected():
                    return
                if session.engine.step != last_step:
                    last_step = session.engine.step
                    payload = {
                        "v": PROTOCOL_VERSION,
                        "step": last_step,
                        "posterior": _snapshot_to_dict(session.engine.snapshot(), session.top_k),
                    }
                    yield f"data: {json.dumps(payload)}\n\n"
                    sent += 1
                await asyncio.sleep(0.15)

        return StreamingResponse(events(), media_type="text/event-stream")

    return app



def serve(host: str = "127.0.0.1", port: int = 8000, lexicon: Lexicon | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(lexicon), host=host, port=port)
