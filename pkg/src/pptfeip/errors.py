"""Exception taxonomy. Families map 1:1 to CLI exit codes (see cli.py)."""


class PptfeError(Exception):
    """Base class for all library errors."""


class UsageError(PptfeError):
    """Bad arguments or unsupported parameter combination."""


class DimensionError(UsageError):
    """Vector length does not match the system dimension."""


class IdentityDomainError(UsageError):
    """Identity scalar outside [1, p-1]."""


class DecodeError(PptfeError):
    """Byte string is not a canonical encoding of the expected type."""


class CorruptionError(DecodeError):
    """Persisted artifact failed its integrity digest."""


class ArtifactTypeError(DecodeError):
    """Persisted artifact has the wrong type tag for this loader."""


class ConflictError(PptfeError):
    """Registry label or identity already present."""


class VerificationError(PptfeError):
    """A cryptographic check failed."""


class ProtocolAbortError(VerificationError):
    """KGC refused to issue: the user's proof of knowledge is invalid."""


class IssuanceError(VerificationError):
    """User-side finalization failed; ``stage`` names the failed check."""

    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        super().__init__(f"issuance failed at stage '{stage}'" + (f": {detail}" if detail else ""))


class TransportError(PptfeError):
    """Socket-level failure while talking to the KGC service."""


class FrameError(TransportError):
    """Malformed wire frame."""


class FrameTruncatedError(FrameError):
    """Stream ended inside a frame."""


class FrameSizeError(FrameError):
    """Declared payload exceeds the wire limit."""


class NegotiationError(FrameError):
    """Peer speaks a different protocol version or backend."""


class KgcErrorResponse(TransportError):
    """Server answered with an ERROR frame."""

    def __init__(self, code: int, detail: str):
        self.code = code
        self.detail = detail
        super().__init__(f"KGC error 0x{code:04X}: {detail}")


class DlogRangeError(PptfeError):
    """No discrete log within the search bound (decryption outputs failure)."""


class TraceFailedError(PptfeError):
    """No candidate identity matches the key (trace outputs failure)."""


class BackendUnavailableError(PptfeError):
    """Requested backend is not usable in this environment."""


class BenchShapeError(PptfeError):
    """Benchmark results violate an expected qualitative shape."""
