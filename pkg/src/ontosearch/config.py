"""Configuration loading and validation.

One YAML file with ``paths`` / ``backend`` / ``pipeline`` / ``service``
sections; every key has a default, and the bundled lexicon, stoplist,
ontology, WordNet fixture and corpus are used when paths are omitted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields, replace
from importlib.resources import files
from pathlib import Path

import yaml

from ontosearch.backends import LiveBackendConfig
from ontosearch.ranking import RRF_CONSTANT, RankWeights

log = logging.getLogger(__name__)


class ConfigError(Exception):
    """Missing file or invalid configuration value (names the offending key)."""


def bundled_data_dir() -> Path:
    return Path(str(files("ontosearch") / "data"))


@dataclass(frozen=True)
class PathsConfig:
    ontologies: tuple[str, ...] = ()
    wordnet_dir: str = ""
    stoplist: str = ""
    tag_lexicon: str = ""
    corpus_manifest: str = ""

    def resolved(self) -> "PathsConfig":
        data = bundled_data_dir()
        return PathsConfig(
            ontologies=self.ontologies or (str(data / "university.ttl"),),
            wordnet_dir=self.wordnet_dir or str(data / "wordnet"),
            stoplist=self.stoplist or str(data / "stopwords.txt"),
            tag_lexicon=self.tag_lexicon or str(data / "tags.lex"),
            corpus_manifest=self.corpus_manifest or str(data / "corpus" / "manifest.json"),
        )


@dataclass(frozen=True)
class PipelineConfig:
    q_max: int = 16
    e_max: int = 5
    depth: int = 1
    include_siblings: bool = True
    k_per_query: int = 10
    k_out: int = 20
    theta: int = 1
    k_min: int = 5
    rrf_constant: int = RRF_CONSTANT
    deep_meta: bool = False


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080


@dataclass(frozen=True)
class Config:
    paths: PathsConfig = field(default_factory=PathsConfig)
    backend: str = "corpus"
    live: LiveBackendConfig = field(default_factory=lambda: LiveBackendConfig(endpoint_template=""))
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    weights: RankWeights = field(default_factory=RankWeights)
    service: ServiceConfig = field(default_factory=ServiceConfig)


def _build(section_name: str, cls, data: dict, casts: dict | None = None):
    known = {f.name: f for f in fields(cls)}
    kwargs = {}
    for key, value in data.items():
        if key not in known:
            log.warning("unknown config key %s.%s ignored", section_name, key)
            continue
        if casts and key in casts:
            value = casts[key](key, value)
        kwargs[key] = value
    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise ConfigError(f"invalid {section_name} section: {exc}") from exc


def _require_number(section: str):
    def cast(key, value):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
        return value
    return cast


def load_config(path: str | Path | None = None) -> Config:
    """Load the config file (or pure defaults when ``path`` is None)."""
    if path is None:
        config = Config()
    else:
        config_path = Path(path)
        if not config_path.is_file():
            raise ConfigError(f"config file not found: {config_path}")
        try:
            raw = yaml.safe_load(config_path.read_text(encoding="utf-8")) or {}
        except yaml.YAMLError as exc:
            raise ConfigError(f"{config_path}: invalid YAML: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"{config_path}: top level must be a mapping")
        config = _parse(raw)
    return validate_config(config)


def _parse(raw: dict) -> Config:
    sections = dict(raw)
    paths_data = dict(sections.pop("paths", {}) or {})
    if "ontologies" in paths_data and isinstance(paths_data["ontologies"], list):
        paths_data["ontologies"] = tuple(str(p) for p in paths_data["ontologies"])
    paths = _build("paths", PathsConfig, paths_data)

    backend = sections.pop("backend", "corpus")
    live = _build("live", LiveBackendConfig,
                  {"endpoint_template": "", **(sections.pop("live", {}) or {})})
    pipeline = _build("pipeline", PipelineConfig, sections.pop("pipeline", {}) or {},
                      casts={k: _require_number("pipeline")
                             for k in ("q_max", "e_max", "depth", "k_per_query",
                                       "k_out", "theta", "k_min", "rrf_constant")})
    weights = _build("weights", RankWeights, sections.pop("weights", {}) or {},
                     casts={k: _require_number("weights")
                            for k in ("rrf", "title", "snippet", "url", "phrase")})
    service = _build("service", ServiceConfig, sections.pop("service", {}) or {})
    for key in sections:
        log.warning("unknown config section %s ignored", key)
    return Config(paths=paths, backend=backend, live=live,
                  pipeline=pipeline, weights=weights, service=service)


def validate_config(config: Config) -> Config:
    if config.backend not in ("corpus", "live"):
        raise ConfigError(f"backend must be 'corpus' or 'live', got {config.backend!r}")
    try:
        config.weights.validate()
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    pipe = config.pipeline
    for key in ("q_max", "e_max", "k_per_query", "k_out"):
        if getattr(pipe, key) < 1:
            raise ConfigError(f"pipeline.{key} must be >= 1")
    for key in ("depth", "theta", "k_min", "rrf_constant"):
        if getattr(pipe, key) < 0:
            raise ConfigError(f"pipeline.{key} must be >= 0")
    if config.backend == "live" and not config.live.endpoint_template:
        raise ConfigError("live.endpoint_template is required for the live backend")

    resolved = replace(config, paths=config.paths.resolved())
    for label, path in (
        ("paths.wordnet_dir", resolved.paths.wordnet_dir),
        ("paths.stoplist", resolved.paths.stoplist),
        ("paths.tag_lexicon", resolved.paths.tag_lexicon),
        *((f"paths.ontologies[{i}]", p) for i, p in enumerate(resolved.paths.ontologies)),
    ):
        if not Path(path).exists():
            raise ConfigError(f"{label}: path does not exist: {path}")
    if resolved.backend == "corpus" and not Path(resolved.paths.corpus_manifest).exists():
        raise ConfigError(
            f"paths.corpus_manifest: path does not exist: {resolved.paths.corpus_manifest}"
        )
    return resolved
