"""Certificates, the claim registry and the ``polcert`` command line."""

from .certificate import (
    ASSUMED,
    FALSIFIED,
    INCONCLUSIVE,
    VERIFIED,
    Certificate,
    ClaimRecord,
    body_json,
    digest,
    load_schema,
    render_markdown,
    validate,
)
from .config import MUTATIONS, ConfigError, RunConfig, load_config, thread_count
from .registry import REGISTRY, VERIFY_TARGETS, Claim, claims_for
from .run import classify, search, verify
