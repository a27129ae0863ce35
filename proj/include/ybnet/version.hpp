#pragma once

#define YBNET_VERSION "0.1.0"
