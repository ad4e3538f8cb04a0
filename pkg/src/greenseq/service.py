"""Local HTTP+JSON session service for the interactive explorer.

Sessions are in-memory only; each holds a framed state plus an undo
stack.  Mutations at red vertices are allowed and simply flagged, so the
UI can explore reddening sequences.  Per-session access is serialized
with a lock; distinct sessions run concurrently.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .framed import FramedState, NotCoframedError, frame
from .quiver import Quiver


@dataclass
class Session:
    id: str
    state: FramedState
    undo_stack: list[FramedState] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


def session_view(state: FramedState) -> dict:
    permutation = None
    if state.is_all_red:
        try:
            permutation = list(state.extract_permutation().image)
        except NotCoframedError:
            permutation = None
    annotations = state.history.annotations
    history = [
        {
            "vertex": v,
            "green": annotations[t].is_green,
            "c_vector": list(annotations[t].entries),
        }
        for t, v in enumerate(state.history.vertices)
    ]
    all_green_moves = all(step["green"] for step in history)
    mgs_complete = bool(history) and all_green_moves and state.is_all_red
    return {
        "principal": [list(row) for row in state.principal],
        "cmat": [list(row) for row in state.cmat],
        "vertices": [
            {
                "id": i,
                "green": state.is_green(i),
                "c_vector": list(state.c_vector(i).entries),
            }
            for i in range(1, state.n + 1)
        ],
        "history": history,
        "all_red": state.is_all_red,
        "mgs_complete": mgs_complete,
        "permutation": permutation,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="greenseq explorer", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status)

    def get_session(session_id: str) -> Session | None:
        with registry_lock:
            return sessions.get(session_id)

    @app.post("/sessions")
    async def create_session(request: Request):
        try:
            data = await request.json()
        except Exception:
            return error(400, "request body must be JSON")
        if not isinstance(data, dict):
            return error(400, "request body must be a JSON object")
        quiver_data = data.get("quiver", data)
        try:
            q = Quiver.from_dict(quiver_data)
        except (ValueError, TypeError, KeyError) as exc:
            return error(400, f"malformed quiver: {exc}")
        session = Session(id=uuid.uuid4().hex, state=frame(q))
        with registry_lock:
            sessions[session.id] = session
        return {"id": session.id, "view": session_view(session.state)}

    @app.get("/sessions/{session_id}")
    def get_view(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        with session.lock:
            return session_view(session.state)

    @app.post("/sessions/{session_id}/mutate")
    async def mutate(session_id: str, request: Request):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        try:
            data = await request.json()
            vertex = int(data["vertex"])
        except Exception:
            return error(400, "body must be {\"vertex\": k}")
        with session.lock:
            if not 1 <= vertex <= session.state.n:
                return error(400, f"vertex {vertex} out of range 1..{session.state.n}")
            was_green = session.state.is_green(vertex)
            session.undo_stack.append(session.state)
            session.state = session.state.mutate(vertex)
            view = session_view(session.state)
        view["green"] = was_green
        return view

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        with session.lock:
            if not session.undo_stack:
                return error(409, "nothing to undo")
            session.state = session.undo_stack.pop()
            return session_view(session.state)

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        with session.lock:
            return {
                "quiver": session.state.origin.to_dict(),
                "seq": str(session.state.history),
            }

    @app.delete("/sessions/{session_id}")
    def delete(session_id: str):
        with registry_lock:
            if session_id not in sessions:
                return error(404, "unknown session")
            del sessions[session_id]
        return {"deleted": session_id}

    return app


app = create_app()
