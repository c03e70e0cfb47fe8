"""Local HTTP service exposing the full workflow.

Endpoints: /extract, /lexicons, /lexicons/edit, /examples, /classify,
/report, /evidence, /status. One pipeline job runs at a time; lexicon edits
are serialized through a single lock and every response reports the lexicon
revision it was computed against.
"""

from __future__ import annotations

import os
import threading

from fastapi import FastAPI, HTTPException

from .common import AspectMinerError, LexiconEditError, Polarity
from .config import PipelineConfig
from .lexicons import LexiconEdit, apply_edit, collect_examples
from . import pipeline
from .schemas import (ClassifyRequest, EditRequest, EditResponse, EvidenceModel,
                      EvidenceResponse, ExampleModel, ExamplesResponse, ExtractRequest,
                      JobResponse, LexiconsResponse, ReportResponse, ReportRowModel,
                      StatusResponse)

STAGE_ORDER = ["idle", "extracting", "lexicons_ready", "classifying", "report_ready"]
BUSY_STAGES = {"extracting", "classifying"}


class WorkbenchState:
    """Mutable service state guarded by one lock (single writer)."""

    def __init__(self, config: PipelineConfig | None = None):
        self.lock = threading.Lock()
        self.config = config or PipelineConfig()
        self.stage = "idle"
        self.message = "no dataset loaded"
        self.job_id: str | None = None
        self.job_counter = 0
        self.lexicons = None
        self.corpus = None
        self.report = None
        self.report_revision: int | None = None

    def next_job(self, stage: str, message: str) -> str:
        self.job_counter += 1
        self.job_id = f"job-{self.job_counter}"
        self.stage = stage
        self.message = message
        return self.job_id

    def lexicons_available(self) -> bool:
        return self.lexicons is not None and self.stage in ("lexicons_ready", "report_ready")


def _frontend_dir() -> str | None:
    override = os.environ.get("ASPECTMINER_UI_DIR")
    if override:
        return override if os.path.isdir(override) else None
    here = os.path.dirname(os.path.abspath(__file__))
    candidate = os.path.normpath(os.path.join(here, "..", "..", "frontend"))
    return candidate if os.path.isfile(os.path.join(candidate, "index.html")) else None


def create_app(config: PipelineConfig | None = None,
               run_jobs_in_thread: bool = True) -> FastAPI:
    app = FastAPI(title="aspectminer", version="0.1.0")
    state = WorkbenchState(config)
    app.state.workbench = state

    ui_dir = _frontend_dir()
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    def launch(target) -> None:
        if run_jobs_in_thread:
            threading.Thread(target=target, daemon=True).start()
        else:
            target()

    def require_lexicons() -> None:
        if not state.lexicons_available():
            raise HTTPException(status_code=409,
                                detail=f"lexicons not ready (stage is {state.stage})")

    @app.get("/status", response_model=StatusResponse)
    def status():
        with state.lock:
            return StatusResponse(job_id=state.job_id, stage=state.stage,
                                  message=state.message,
                                  lexicon_revision=state.lexicons.revision if state.lexicons else 0)

    @app.post("/extract", response_model=JobResponse)
    def extract(req: ExtractRequest):
        for path in (req.dataset_path, req.embeddings_path):
            if not os.path.isfile(path):
                raise HTTPException(status_code=400, detail=f"no such file: {path}")
        config = state.config
        if req.config_path:
            if not os.path.isfile(req.config_path):
                raise HTTPException(status_code=400, detail=f"no such file: {req.config_path}")
            try:
                config = PipelineConfig.from_file(req.config_path)
            except AspectMinerError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
        with state.lock:
            if state.stage in BUSY_STAGES:
                raise HTTPException(status_code=409, detail=f"busy: {state.stage}")
            job_id = state.next_job("extracting", f"extracting lexicons from {req.dataset_path}")
            state.config = config

        def run():
            try:
                result = pipeline.extract_lexicons(req.dataset_path, req.embeddings_path, config)
                with state.lock:
                    state.lexicons = result.lexicons
                    state.corpus = result.corpus
                    state.report = None
                    state.report_revision = None
                    state.stage = "lexicons_ready"
                    state.message = (f"extracted {len(result.lexicons.aspects)} aspects and "
                                     f"{len(result.lexicons.opinions)} opinions")
            except Exception as exc:  # surface pipeline failures via /status
                with state.lock:
                    state.stage = "failed"
                    state.message = f"extraction failed: {exc}"

        launch(run)
        return JobResponse(job_id=job_id, stage="extracting")

    @app.get("/lexicons", response_model=LexiconsResponse)
    def get_lexicons():
        with state.lock:
            require_lexicons()
            return LexiconsResponse.from_lexicons(state.lexicons)

    @app.post("/lexicons/edit", response_model=EditResponse)
    def edit_lexicon(req: EditRequest):
        polarity = None
        if req.polarity is not None:
            value = req.polarity.strip().upper()
            if value not in ("POS", "NEG"):
                raise HTTPException(status_code=400,
                                    detail=f"polarity must be POS or NEG, got {req.polarity!r}")
            polarity = Polarity(value)
        edit = LexiconEdit(action=req.action, term=req.term, kind=req.kind,
                           enabled=req.enabled, slot=req.slot, alias=req.alias,
                           polarity=polarity, score=req.score)
        with state.lock:
            require_lexicons()
            try:
                state.lexicons = apply_edit(state.lexicons, edit)
            except LexiconEditError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            return EditResponse(revision=state.lexicons.revision)

    @app.get("/examples", response_model=ExamplesResponse)
    def get_examples(term: str, limit: int = 10):
        if limit < 1:
            raise HTTPException(status_code=400, detail="limit must be positive")
        with state.lock:
            require_lexicons()
            examples = collect_examples(state.corpus, term, limit) if state.corpus else []
            return ExamplesResponse(
                term=term, lexicon_revision=state.lexicons.revision,
                examples=[ExampleModel(sentence_text=text, span=span)
                          for text, span in examples])

    @app.post("/classify", response_model=JobResponse)
    def classify(req: ClassifyRequest):
        if not os.path.isfile(req.target_dataset_path):
            raise HTTPException(status_code=400,
                                detail=f"no such file: {req.target_dataset_path}")
        with state.lock:
            if state.stage in BUSY_STAGES:
                raise HTTPException(status_code=409, detail=f"busy: {state.stage}")
            require_lexicons()
            lexicons = state.lexicons
            revision = lexicons.revision
            config = state.config
            job_id = state.next_job("classifying", f"classifying {req.target_dataset_path}")

        def run():
            try:
                result = pipeline.classify_target(req.target_dataset_path, lexicons, config)
                with state.lock:
                    state.report = result.report
                    state.report_revision = revision
                    state.stage = "report_ready"
                    state.message = f"report over {len(result.mentions)} mentions"
            except Exception as exc:
                with state.lock:
                    state.stage = "failed"
                    state.message = f"classification failed: {exc}"

        launch(run)
        return JobResponse(job_id=job_id, stage="classifying")

    @app.get("/report", response_model=ReportResponse)
    def get_report():
        with state.lock:
            if state.stage != "report_ready" or state.report is None:
                raise HTTPException(status_code=409,
                                    detail=f"report not ready (stage is {state.stage})")
            return ReportResponse(lexicon_revision=state.report_revision or 0,
                                  rows=[ReportRowModel.from_row(r) for r in state.report])

    @app.get("/evidence", response_model=EvidenceResponse)
    def get_evidence(aspect_term: str):
        with state.lock:
            if state.stage != "report_ready" or state.report is None:
                raise HTTPException(status_code=409,
                                    detail=f"report not ready (stage is {state.stage})")
            rows = []
            for report_row in state.report:
                if report_row.aspect_term != aspect_term:
                    continue
                rows = [EvidenceModel(sentence_text=e.sentence_text, aspect_span=e.aspect_span,
                                      opinion_span=e.opinion_span, polarity=e.polarity.value)
                        for e in report_row.evidence]
                break
            return EvidenceResponse(aspect_term=aspect_term,
                                    lexicon_revision=state.report_revision or 0,
                                    rows=rows)

    return app


def default_app() -> FastAPI:
    return create_app()
