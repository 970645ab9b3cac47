"""CMake-backed build for the betheotto._core extension.

The canonical build system is CMake; this shim lets `pip install .` work by
driving CMake from setuptools and copying the built extension into the
package. (scikit-build-core would do the same job, but keeping the shim
dependency-free matters more here.)
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        import pybind11

        configure = [
            "cmake",
            "-S",
            str(source_dir),
            "-B",
            str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
        ]
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "--parallel"],
            check=True,
        )

        built = list((build_dir / "python" / "betheotto").glob("_core*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core extension")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], target)


setup(
    packages=["betheotto"],
    package_dir={"betheotto": "python/betheotto"},
    ext_modules=[CMakeExtension("betheotto._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
