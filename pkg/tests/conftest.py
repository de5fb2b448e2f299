import pathlib
import sys

try:
    import fibint  # noqa: F401
except ImportError:  # running from a source checkout without installation
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
