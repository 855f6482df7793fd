#pragma once

#define NOHAIR_VERSION_MAJOR 0
#define NOHAIR_VERSION_MINOR 1
#define NOHAIR_VERSION_PATCH 0
#define NOHAIR_VERSION_STRING "0.1.0"
