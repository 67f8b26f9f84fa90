from .extract import (
    FORMAT_VERSION,
    ExtractionRequest,
    ModelUnavailableError,
    WriteError,
    encode,
    extract,
)

__version__ = "0.1.0"
