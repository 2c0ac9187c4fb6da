"""HTTP service exposing the engine to interactive clients.

Frameworks are held in named sessions with revision counters, an undo
stack, and per-revision result caches.  All error responses share one
envelope: ``{"error": {"code": ..., "message": ..., "details": {...}}}``.
Request bodies are read raw so malformed JSON gets the same envelope as
every other failure instead of the web framework's default.
"""
from __future__ import annotations

import json
import re
import secrets
import threading
import time
import warnings
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from . import __version__
from .audience import Status, status_map
from .chains import classify_dichromatic, decompose_chains
from .core import DEFAULT_LIMIT, TotalValueOrder, Vaf, induced_defeat_graph
from .docio import (FrameworkDocument, build_vaf, document_from_vaf, export_dot,
                    parse_framework, serialize_framework)
from .errors import (FrameworkSyntaxError, SchemaError, ValidationError,
                     VafError)
from .fixtures import all_fixtures, get_fixture
from .moves import Move, apply_move, fresh_argument_id, suggest_moves
from .semantics import extend_algorithm

DEFAULT_TTL_SECONDS = 24 * 60 * 60

# Everything not listed here is a domain-rule violation and maps to 422.
_STATUS_BY_CODE = {
    "SyntaxError": 400,
    "SchemaError": 400,
    "InvalidFramework": 400,
    "UnknownSession": 404,
    "UnknownFixture": 404,
    "DuplicateArgumentId": 409,
}


class _Session:
    def __init__(self, session_id: str, vaf: Vaf, orders=()):
        self.id = session_id
        self.vaf = vaf
        self.orders = tuple(orders)
        self.revision = 0
        self.history = []
        self.lock = threading.Lock()
        self.last_access = time.monotonic()
        self._cache = {}

    def cached(self, key: str, compute):
        slot = self._cache.get(key)
        if slot is not None and slot[0] == self.revision:
            return slot[1]
        result = compute()
        self._cache[key] = (self.revision, result)
        return result

    def mutate(self, vaf: Vaf):
        self.history.append(self.vaf)
        self.vaf = vaf
        self.revision += 1

    def undo(self):
        if not self.history:
            raise VafError("NothingToUndo", "the session has no move to undo")
        self.vaf = self.history.pop()
        self.revision += 1


class _SessionStore:
    def __init__(self, ttl_seconds: float, snapshot_dir):
        self._sessions = {}
        self._lock = threading.Lock()
        self._ttl = ttl_seconds
        self._snapshot_dir = Path(snapshot_dir) if snapshot_dir else None

    def _purge(self):
        now = time.monotonic()
        stale = [sid for sid, s in self._sessions.items()
                 if now - s.last_access > self._ttl]
        for sid in stale:
            del self._sessions[sid]

    def create(self, vaf: Vaf, orders=()) -> _Session:
        with self._lock:
            self._purge()
            sid = secrets.token_urlsafe(9)
            while sid in self._sessions:
                sid = secrets.token_urlsafe(9)
            session = _Session(sid, vaf, orders)
            self._sessions[sid] = session
        self.snapshot(session)
        return session

    def get(self, session_id: str) -> _Session:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
            if session is None:
                session = self._restore(session_id)
            if session is None:
                raise VafError("UnknownSession",
                               f"no framework session {session_id!r}")
            session.last_access = time.monotonic()
            return session

    def snapshot(self, session: _Session):
        """Persist the current document; history does not survive a restore."""
        if self._snapshot_dir is None:
            return
        self._snapshot_dir.mkdir(parents=True, exist_ok=True)
        doc = document_from_vaf(session.vaf, session.orders)
        path = self._snapshot_dir / f"{session.id}.json"
        path.write_text(serialize_framework(doc), encoding="utf-8")

    def _restore(self, session_id: str):
        if self._snapshot_dir is None:
            return None
        path = self._snapshot_dir / f"{session_id}.json"
        if not path.is_file() or not _SAFE_ID.fullmatch(session_id):
            return None
        doc = parse_framework(path.read_text(encoding="utf-8"))
        session = _Session(session_id, build_vaf(doc), doc.orders)
        self._sessions[session_id] = session
        return session


_SAFE_ID = re.compile(r"[A-Za-z0-9_-]+")


def _error_response(exc: VafError) -> JSONResponse:
    status = _STATUS_BY_CODE.get(exc.code, 422)
    details = dict(exc.details)
    if isinstance(exc, ValidationError):
        details["issues"] = [{"code": c, "message": m} for c, m in exc.issues]
    payload = {"error": {"code": exc.code, "message": exc.message,
                         "details": details}}
    return JSONResponse(payload, status_code=status)


async def _read_json_body(request: Request) -> dict:
    text = (await request.body()).decode("utf-8", errors="replace")
    if not text.strip():
        raise SchemaError("$", "request body must not be empty")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameworkSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(raw, dict):
        raise SchemaError("$", "request body must be a JSON object")
    return raw


def _document_payload(doc: FrameworkDocument) -> dict:
    return json.loads(serialize_framework(doc))


def _ranking_members(accepted) -> list:
    return [{"ranking": list(ranking), "members": sorted(members)}
            for ranking, members in sorted(accepted.items())]


def _status_payload(vaf: Vaf) -> dict:
    report = status_map(vaf)
    return {
        "statuses": {a: str(s) for a, s in report.statuses.items()},
        "orderCount": report.order_count,
        "usedScepticalFallback": report.used_sceptical_fallback,
        "accepted": _ranking_members(report.accepted),
    }


def _chains_payload(vaf: Vaf) -> dict:
    classification = classify_dichromatic(vaf)
    deco = classification.decomposition
    return {
        "chains": [{"members": list(c.members), "value": c.value,
                    "parity": c.parity} for c in deco.chains],
        "positions": {a: [[i, p] for i, p in deco.positions[a]]
                      for a in vaf.arguments},
        "effectiveParity": dict(deco.effective_parity),
        "classification": {
            "statuses": {a: str(s) for a, s in classification.statuses.items()},
            "rules": dict(classification.rules),
        },
    }


def _move_payload(move: Move) -> dict:
    return {"newArgument": move.new_argument, "newValue": move.new_value,
            "attackTarget": move.attack_target, "template": move.template}


def _parse_order(session: _Session, raw: str) -> TotalValueOrder:
    if not raw:
        raise SchemaError("order", "query parameter is required, e.g. ?order=life,property")
    for spec in session.orders:
        if spec.name == raw:
            return TotalValueOrder(tuple(spec.ranking))
    return TotalValueOrder(tuple(part.strip() for part in raw.split(",")))


def _parse_desired(raw) -> Status:
    try:
        return Status(raw)
    except ValueError:
        names = ", ".join(s.value for s in Status)
        raise SchemaError("desired", f"must be one of: {names}") from None


def create_app(ttl_seconds: float = DEFAULT_TTL_SECONDS, snapshot_dir=None,
               limit=DEFAULT_LIMIT) -> FastAPI:
    app = FastAPI(title="vafw", version=__version__)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    store = _SessionStore(ttl_seconds, snapshot_dir)
    app.state.store = store

    @app.middleware("http")
    async def add_engine_version(request: Request, call_next):
        response = await call_next(request)
        response.headers["X-Engine-Version"] = __version__
        return response

    @app.exception_handler(VafError)
    async def vaf_error_handler(request: Request, exc: VafError):
        return _error_response(exc)

    @app.get("/health")
    async def health():
        return {"status": "ok", "engineVersion": __version__}

    @app.post("/frameworks", status_code=201)
    async def create_framework(request: Request):
        text = (await request.body()).decode("utf-8", errors="replace")
        doc = parse_framework(text)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            vaf = build_vaf(doc)
        session = store.create(vaf, doc.orders)
        return {
            "id": session.id,
            "revision": session.revision,
            "warnings": [str(w.message) for w in caught],
            "summary": {"argumentCount": len(vaf.arguments),
                        "attackCount": len(vaf.attacks),
                        "values": sorted(vaf.values)},
        }

    @app.get("/frameworks/{session_id}")
    async def get_framework(session_id: str):
        session = store.get(session_id)
        with session.lock:
            doc = document_from_vaf(session.vaf, session.orders)
            return {"id": session.id, "revision": session.revision,
                    "undoDepth": len(session.history),
                    "document": _document_payload(doc)}

    @app.get("/frameworks/{session_id}/status")
    async def framework_status(session_id: str):
        session = store.get(session_id)
        with session.lock:
            payload = session.cached("status", lambda: _status_payload(session.vaf))
            return {"revision": session.revision, **payload}

    @app.get("/frameworks/{session_id}/extension")
    async def framework_extension(session_id: str, order: str = ""):
        session = store.get(session_id)
        with session.lock:
            total = _parse_order(session, order)
            members = extend_algorithm(session.vaf, total)
            graph = induced_defeat_graph(session.vaf, total)
            return {"revision": session.revision,
                    "ranking": list(total.ranking),
                    "members": sorted(members),
                    "defeats": sorted([list(e) for e in graph.defeats])}

    @app.get("/frameworks/{session_id}/chains")
    async def framework_chains(session_id: str):
        session = store.get(session_id)
        with session.lock:
            payload = session.cached("chains", lambda: _chains_payload(session.vaf))
            return {"revision": session.revision, **payload}

    @app.post("/frameworks/{session_id}/moves/suggest")
    async def moves_suggest(session_id: str, request: Request):
        body = await _read_json_body(request)
        target = body.get("target")
        if not isinstance(target, str) or not target:
            raise SchemaError("target", "is required and must be an argument id")
        desired = _parse_desired(body.get("desired"))
        exhaustive = bool(body.get("exhaustive", False))
        session = store.get(session_id)
        with session.lock:
            moves = suggest_moves(session.vaf, target, desired,
                                  exhaustive=exhaustive, limit=limit)
            return {"revision": session.revision,
                    "target": target, "desired": desired.value,
                    "moves": [_move_payload(m) for m in moves]}

    @app.post("/frameworks/{session_id}/moves/apply")
    async def moves_apply(session_id: str, request: Request):
        body = await _read_json_body(request)
        for fieldname in ("newValue", "attackTarget"):
            if not isinstance(body.get(fieldname), str) or not body[fieldname]:
                raise SchemaError(fieldname, "is required and must be a string")
        session = store.get(session_id)
        with session.lock:
            new_argument = body.get("newArgument") or fresh_argument_id(session.vaf)
            if not isinstance(new_argument, str):
                raise SchemaError("newArgument", "must be a string")
            move = Move(new_argument=new_argument, new_value=body["newValue"],
                        attack_target=body["attackTarget"],
                        template=str(body.get("template", "manual")))
            session.mutate(apply_move(session.vaf, move))
            store.snapshot(session)
            return {"revision": session.revision, "move": _move_payload(move),
                    "undoDepth": len(session.history)}

    @app.post("/frameworks/{session_id}/undo")
    async def undo(session_id: str):
        session = store.get(session_id)
        with session.lock:
            session.undo()
            store.snapshot(session)
            return {"revision": session.revision,
                    "undoDepth": len(session.history)}

    @app.get("/frameworks/{session_id}/export")
    async def export(session_id: str, format: str = "dot"):
        session = store.get(session_id)
        with session.lock:
            if format == "json":
                doc = document_from_vaf(session.vaf, session.orders)
                return Response(serialize_framework(doc),
                                media_type="application/json")
            if format == "dot":
                try:
                    statuses = status_map(session.vaf).statuses
                except VafError:
                    statuses = None
                return PlainTextResponse(export_dot(session.vaf, statuses=statuses),
                                         media_type="text/vnd.graphviz")
            raise VafError("UnknownExportFormat",
                           f"format must be 'dot' or 'json', not {format!r}")

    @app.get("/fixtures")
    async def fixtures_index():
        out = []
        for fx in all_fixtures():
            out.append({"name": fx.name, "description": fx.description,
                        "values": sorted(fx.document.values),
                        "argumentCount": len(fx.document.arguments),
                        "attackCount": len(fx.document.attacks)})
        return {"fixtures": out}

    @app.get("/fixtures/{name}")
    async def fixture_detail(name: str):
        fx = get_fixture(name)
        return {"name": fx.name, "description": fx.description,
                "document": _document_payload(fx.document),
                "expected": json.loads(json.dumps(dict(fx.expected)))}

    return app
