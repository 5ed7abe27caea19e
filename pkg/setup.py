from setuptools import setup, find_namespace_packages

setup(
    name="hypertoric-kit",
    version="0.1.0",
    description="Combinatorics of hypertoric category O: chambers, quivers, dimensions",
    author="Your Name",
    author_email="your.email@example.com",
    packages=find_namespace_packages(include=["src", "src.*"]),
    install_requires=[
        "pydantic>=2.0.0",
        "python-dotenv>=1.0.0",
        "aws-lambda-powertools>=2.0.0",
        "sympy>=1.12",
        "numpy>=1.24",
        "svgwrite>=1.4",
    ],
    entry_points={
        "console_scripts": [
            "hypertoric-kit=src.cli.main:main",
        ],
    },
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
