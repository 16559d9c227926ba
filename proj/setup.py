# Copyright 2026 The scramblemetry authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Setuptools shim that delegates the extension build to CMake.

Project metadata lives in pyproject.toml; this file only teaches build_ext
to configure and build the `scramblemetry_python` CMake target and drop the
resulting module where setuptools expects it.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        import pybind11

        build_temp = Path(self.build_temp).resolve() / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        config = "Debug" if self.debug else "Release"
        configure = [
            "cmake",
            "-S", ext.sourcedir,
            "-B", str(build_temp),
            f"-DCMAKE_BUILD_TYPE={config}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DSCRAMBLEMETRY_BUILD_CLI=OFF",
            "-DSCRAMBLEMETRY_BUILD_TESTS=OFF",
            "-DSCRAMBLEMETRY_BUILD_PYTHON=ON",
        ]
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_temp),
             "--target", "scramblemetry_python", "--parallel"],
            check=True,
        )

        built = sorted((build_temp / "python" / "scramblemetry").glob("_core.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        destination = Path(self.get_ext_fullpath(ext.name)).resolve()
        destination.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], destination)


setup(
    ext_modules=[CMakeExtension("scramblemetry._core")],
    cmdclass={"build_ext": CMakeBuild},
)
