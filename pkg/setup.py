import os
import re
from setuptools import setup, find_packages

# Read version from __init__.py
with open(os.path.join('senweaver_bms', '__init__.py'), 'r', encoding='utf-8') as f:
    version = re.search(r'__version__\s*=\s*[\'"]([^\'"]*)[\'"]', f.read()).group(1)

# Read README.md for long description
with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='senweaver-bms',
    version=version,
    description='802.11信道绑定多臂赌博机离散事件仿真器',
    long_description=long_description,
    long_description_content_type='text/markdown',
    author='senweaver',
    url='https://github.com/senweaver/senweaver-bms',
    packages=find_packages(exclude=('tests', 'tests.*', 'examples', 'examples.*')),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: System :: Networking',
    ],
    python_requires='>=3.8',
    keywords='wlan, 802.11, channel bonding, multi-armed bandit, simulation, senweaver',
    install_requires=[
        "numpy>=1.22.0",
        "networkx>=2.8",
        "pandas>=1.4.0",
        "matplotlib>=3.5.0",
        "pyyaml>=6.0",
        "joblib>=1.1.0",
        "cachetools>=5.0.0",
    ],
    extras_require={
        'test': ["pytest>=7.0.0"],
    },
    entry_points={
        'console_scripts': [
            'senweaver-bms=senweaver_bms.cli:main',
        ],
    },
    project_urls={
        'Bug Reports': 'https://github.com/senweaver/senweaver-bms/issues',
        'Source': 'https://github.com/senweaver/senweaver-bms',
    },
)
