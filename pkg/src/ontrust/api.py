"""HTTP API over the engine.

Every endpoint takes the ONT-I document inline (the service is stateless)
and returns both structured fields and the same deterministic report text
the CLI prints.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import service
from .errors import OntrustError

app = FastAPI(title="ontrust", version=service.version_string())


class DocumentRequest(BaseModel):
    document: str = Field(description="ONT-I (ontrust-i/1) document text")


class DiagnosticModel(BaseModel):
    axiom: str
    severity: str
    offenders: list[str]
    message: str


class ValidateResponse(BaseModel):
    diagnostics: list[DiagnosticModel]
    errors: int
    warnings: int
    text: str


class ClassifyRequest(DocumentRequest):
    trust: str | None = None


class ClassificationModel(BaseModel):
    trust_id: str
    trustor: str
    trustee: str
    kind: str


class ClassifyResponse(BaseModel):
    classifications: list[ClassificationModel]
    text: str


class DegreeRequest(DocumentRequest):
    context: str = "default"
    scale: str | None = None
    trust: str | None = None


class DegreeRow(BaseModel):
    trust_id: str
    degree: float
    degree_on_scale: str | None
    per_belief: dict[str, tuple[float, float]]


class DegreeResponse(BaseModel):
    rows: list[DegreeRow]
    text: str


class RiskChainModel(BaseModel):
    action: str
    situation: str
    threat: str
    loss: str | None
    hurt_intentions: list[str]
    vulnerability: str | None
    complete: bool


class RiskResponse(BaseModel):
    chains: list[RiskChainModel]
    text: str


class FindRequest(BaseModel):
    signature: str = Field(description="signature document (ontrust-sig/1)")
    property: str
    disable: list[str] = Field(default_factory=list)
    bound: int | None = None


class FindResponse(BaseModel):
    found: bool
    witness: str | None


class ExportResponse(BaseModel):
    triples: str


class VersionResponse(BaseModel):
    version: str


def _load(document: str):
    try:
        return service.load_document(document)
    except OntrustError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None


@app.get("/version", response_model=VersionResponse)
def version() -> VersionResponse:
    return VersionResponse(version=service.version_string())


@app.post("/validate", response_model=ValidateResponse)
def validate(request: DocumentRequest) -> ValidateResponse:
    graph, _ = _load(request.document)
    result = service.run_validate(graph)
    return ValidateResponse(
        diagnostics=[
            DiagnosticModel(
                axiom=d.axiom.value,
                severity=d.severity,
                offenders=d.offenders,
                message=d.message,
            )
            for d in result.diagnostics
        ],
        errors=result.errors,
        warnings=result.warnings,
        text=result.text,
    )


@app.post("/classify", response_model=ClassifyResponse)
def classify(request: ClassifyRequest) -> ClassifyResponse:
    graph, _ = _load(request.document)
    try:
        rows = service.run_classify(graph, request.trust)
    except OntrustError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return ClassifyResponse(
        classifications=[ClassificationModel(**vars(r)) for r in rows],
        text=service.classification_text(rows),
    )


@app.post("/degree", response_model=DegreeResponse)
def degree(request: DegreeRequest) -> DegreeResponse:
    graph, contexts = _load(request.document)
    try:
        reports = service.run_degree(
            graph, contexts, request.context, request.scale, request.trust
        )
    except OntrustError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return DegreeResponse(
        rows=[
            DegreeRow(
                trust_id=r.trust_id,
                degree=r.degree,
                degree_on_scale=(
                    str(r.degree_on_scale.raw) if r.degree_on_scale is not None else None
                ),
                per_belief=r.per_belief,
            )
            for r in reports
        ],
        text=service.degree_text(reports),
    )


@app.post("/risk", response_model=RiskResponse)
def risk(request: DocumentRequest) -> RiskResponse:
    graph, _ = _load(request.document)
    chains = service.run_risk(graph)
    return RiskResponse(
        chains=[
            RiskChainModel(
                action=c.action,
                situation=c.situation,
                threat=c.threat,
                loss=c.loss,
                hurt_intentions=c.hurt_intentions,
                vulnerability=c.vulnerability,
                complete=c.complete,
            )
            for c in chains
        ],
        text=service.risk_text(graph, chains),
    )


@app.post("/find", response_model=FindResponse)
def find(request: FindRequest) -> FindResponse:
    try:
        witness = service.run_find(
            request.signature, request.property, request.disable, request.bound
        )
    except OntrustError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return FindResponse(
        found=witness is not None,
        witness=service.find_text(witness) if witness is not None else None,
    )


@app.post("/export", response_model=ExportResponse)
def export(request: DocumentRequest) -> ExportResponse:
    graph, _ = _load(request.document)
    return ExportResponse(triples=service.run_export(graph).decode("ascii"))
