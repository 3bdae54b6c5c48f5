from setuptools import setup, find_packages

setup(
    name="cmhk",
    version="0.1.0",
    description="Invariantes de Hilbert para formas quadráticas CM, corpos p-ádicos e φ-módulos filtrados",
    author="Misael",
    author_email="misael@example.com",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "sympy>=1.12",
        "numpy>=1.20.0",
        "pandas>=1.3.0",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0.0",
            "hypothesis>=6.0.0",
            "black",
            "isort",
            "mypy",
            "flake8",
        ],
    },
    entry_points={
        "console_scripts": [
            "cmhk=cmhk.__main__:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
