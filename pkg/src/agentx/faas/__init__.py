"""Local emulation of serverless MCP hosting: manifests, routing, sessions,
blob storage and GB-second metering."""

from .blob import BlobStore, BlobUri
from .manifest import Deployment, FunctionManifest, deploy
from .meter import InvocationRecord, Meter, faas_cost

__all__ = [
    "BlobStore",
    "BlobUri",
    "Deployment",
    "FunctionManifest",
    "deploy",
    "InvocationRecord",
    "Meter",
    "faas_cost",
]
