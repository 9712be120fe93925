"""CMake-backed setuptools build for the racsim extension.

Use `pip install --no-build-isolation -e .` in environments where build
dependencies are already present.
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
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S",
                str(source_dir),
                "-B",
                str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DRACSIM_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "racsim_pycore", "--parallel"],
            check=True,
        )

        package_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        package_dir.mkdir(parents=True, exist_ok=True)
        built = list((build_dir / "python" / "racsim").glob("_core*"))
        if not built:
            raise RuntimeError("CMake build did not produce the _core extension")
        for artifact in built:
            shutil.copy2(artifact, package_dir / artifact.name)


setup(
    packages=["racsim"],
    package_dir={"racsim": "python/racsim"},
    ext_modules=[CMakeExtension("racsim._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
