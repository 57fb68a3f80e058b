class DomwbError(Exception):
    """Base class for every error raised by domwb."""
