from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back to mintough._pycore
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "mintough._core",
                ["src/mintough/_core.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
