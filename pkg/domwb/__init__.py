try:
    from domwb._version import version
except ImportError:  # running from a source tree without setuptools_scm metadata
    version = "0.0.0"

__version__ = version
