#!/usr/bin/env python3
"""
sptlab Setup Script

Installation script for the exact q-series verification laboratory.
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the README file for the long description
readme_file = Path(__file__).parent / "README.md"
long_description = readme_file.read_text(encoding="utf-8") if readme_file.exists() else ""

setup(
    name="sptlab",
    version="1.0.0",
    description="Exact q-series laboratory for smallest-part partition statistics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["Tests", "Tests.*", "examples", "examples.*"]),
    py_modules=["sptlab"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
    install_requires=[
        "python-dotenv>=1.0",
        "sympy>=1.12",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4",
            "pytest-cov>=4.1",
            "black>=23.0",
            "flake8>=6.0",
            "mypy>=1.5",
        ],
        "color": [
            "colorama>=0.4",
        ],
    },
    entry_points={
        "console_scripts": [
            "sptlab=sptlab:main",
        ],
    },
    include_package_data=True,
    package_data={
        "": ["*.md", "*.txt"],
        "docs": ["*.md"],
    },
    zip_safe=False,
    keywords="partitions q-series spt crank rank bailey-pairs congruences",
)
