import importlib.util
import os
import pathlib
import sys

# Inside a CMake build tree the extension is not installed; load it from the
# build directory and pair it with the package sources.
_ext_dir = os.environ.get("FRACLAG_EXTENSION_DIR")
if _ext_dir:
    candidates = sorted(pathlib.Path(_ext_dir).glob("_fraclag*.so"))
    if candidates:
        spec = importlib.util.spec_from_file_location("fraclag._fraclag", candidates[0])
        module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(module)
        sys.modules["fraclag._fraclag"] = module
        sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[2] / "python"))
