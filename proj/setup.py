import os
import subprocess
import sys
from pathlib import Path

import pybind11
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        source_dir = Path(__file__).resolve().parent
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}{os.sep}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DDP4AUT_PYTHON=ON",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_temp)] + cmake_args,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_dp4aut", "-j"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("dp4aut._dp4aut")],
    cmdclass={"build_ext": CMakeBuild},
)
