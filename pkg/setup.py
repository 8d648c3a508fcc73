#!/usr/bin/env python3
import os
import re
from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))


def read_text(*parts):
    with open(os.path.join(here, *parts), "r") as f:
        return f.read()


def valmat_version():
    """``__version__`` as set in ``valmat/__init__.py``"""
    match = re.search(
        r"^__version__ = ['\"]([^'\"]*)['\"]",
        read_text("valmat", "__init__.py"),
        re.M,
    )
    if match is None:
        raise RuntimeError("valmat/__init__.py sets no __version__")
    return match.group(1)


def requirements(*parts):
    """Non empty, non comment lines of a requirements file"""
    lines = read_text(*parts).split("\n")
    lines = [line.split("#")[0].strip() for line in lines]
    return [line for line in lines if line]


setup(
    name="valmat",
    version=valmat_version(),
    description="Valuated matroids and uniform semimodular lattices",
    long_description=read_text("README.md"),
    long_description_content_type="text/markdown",
    license="MIT License",
    packages=find_packages(exclude=("tests", "tests.*")),
    python_requires=">=3.7",
    install_requires=requirements("requirements.txt"),
    entry_points={
        "console_scripts": ["valmat=valmat.command_line:main"],
    },
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
