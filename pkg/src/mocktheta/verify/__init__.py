"""Identity registry and residual harness.

Importing this package populates :data:`REGISTRY` with every law.
"""

from . import theta_laws  # noqa: F401
from . import mock_laws  # noqa: F401
from . import scaling_laws  # noqa: F401
from . import sl21_laws  # noqa: F401
from . import a11_laws  # noqa: F401
from . import scft_laws  # noqa: F401
from .core import (
    REGISTRY,
    IdentityReport,
    IdentitySpec,
    SamplerStarvation,
    SchemaError,
    UnknownIdentityError,
    check_identity,
    list_identities,
    residual,
    sample_domain,
)

__all__ = [
    "REGISTRY",
    "IdentityReport",
    "IdentitySpec",
    "SamplerStarvation",
    "SchemaError",
    "UnknownIdentityError",
    "check_identity",
    "list_identities",
    "residual",
    "sample_domain",
]
